#include "icekernel/asm_enumerate.hpp"

#include <string>
#include <vector>

namespace icekernel {

namespace {

// Shared row walker: fills entries of row i (given the incoming column-prefix
// mask) one cell at a time, keeping the running row prefix rho in {0,1}, and
// hands every completed row (rho == 1) to `next` with the updated mask.
template <class Next>
void walk_row(int cols, int i, std::vector<std::int8_t>& cells, unsigned mask, const Next& next) {
    struct Rec {
        int cols, i;
        std::vector<std::int8_t>& cells;
        const Next& next;
        void cell(int j, int rho, unsigned m) const {
            if (j == cols) {
                if (rho == 1) next(m);
                return;
            }
            const int b = static_cast<int>((m >> j) & 1u);
            for (int e = -1; e <= 1; ++e) {
                const int b2 = b + e;
                const int r2 = rho + e;
                if (b2 < 0 || b2 > 1 || r2 < 0 || r2 > 1) continue;
                cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                      static_cast<std::size_t>(j)] = static_cast<std::int8_t>(e);
                const unsigned m2 = (m & ~(1u << j)) | (static_cast<unsigned>(b2) << j);
                cell(j + 1, r2, m2);
            }
        }
    };
    Rec rec{cols, i, cells, next};
    rec.cell(0, 0, mask);
}

Asm materialize(int n, const std::vector<std::int8_t>& cells) {
    Asm a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.set(i, j, cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(j)]);
    return a;
}

void check_cap(int order, int cap, int hard_cap) {
    if (order < 1) throw Error("enumeration order must be positive");
    if (order > cap || order > hard_cap)
        throw OrderTooLarge("order " + std::to_string(order) + " exceeds enumeration cap " +
                            std::to_string(cap < hard_cap ? cap : hard_cap));
}

}  // namespace

void enumerate_asms(int order, const std::function<void(const Asm&)>& visit, int cap) {
    check_cap(order, cap, 8);
    std::vector<std::int8_t> cells(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));

    // Row-by-row recursion; when all rows are placed every column prefix is
    // automatically 1 (the n row sums contribute n in total).
    std::function<void(int, unsigned)> row = [&](int i, unsigned mask) {
        if (i == order) {
            visit(materialize(order, cells));
            return;
        }
        walk_row(order, i, cells, mask, [&](unsigned m2) { row(i + 1, m2); });
    };
    row(0, 0u);
}

void enumerate_ht_asms(int order, const std::function<void(const Asm&)>& visit, int cap) {
    if (order % 2 != 0)
        throw OddOrderForHalfTurn("half-turn classes exist only for even order");
    check_cap(order, cap, 8);
    const int half = order / 2;
    const unsigned full_mask = (1u << order) - 1u;  // order <= 8 here
    std::vector<std::int8_t> cells(static_cast<std::size_t>(half) * static_cast<std::size_t>(order));

    auto seam_complementary = [&](unsigned m) {
        unsigned rev = 0;
        for (int j = 0; j < order; ++j)
            if (m & (1u << j)) rev |= 1u << (order - 1 - j);
        return (m ^ rev) == full_mask;
    };

    std::function<void(int, unsigned)> row = [&](int i, unsigned mask) {
        if (i == half) {
            if (!seam_complementary(mask)) return;
            Asm a(order);
            for (int r = 0; r < half; ++r)
                for (int j = 0; j < order; ++j) {
                    const int v = cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(order) +
                                        static_cast<std::size_t>(j)];
                    a.set(r, j, v);
                    a.set(order - 1 - r, order - 1 - j, v);
                }
            visit(a);
            return;
        }
        walk_row(order, i, cells, mask, [&](unsigned m2) { row(i + 1, m2); });
    };
    row(0, 0u);
}

}  // namespace icekernel
