#include "icekernel/bruteforce.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include "icekernel/asm_enumerate.hpp"
#include "icekernel/asm_matrix.hpp"
#include "icekernel/errors.hpp"
#include "icekernel/vertex.hpp"

namespace icekernel {

namespace {

struct WeightTables {
    int n = 0;
    std::vector<double> wa, wb;  // n*n row-major, indexed by vertex position
    double c = 0.0;
};

WeightTables make_tables(const SpectralConfig& cfg) {
    require_order(cfg);
    const int n = cfg.order();
    WeightTables t;
    t.n = n;
    t.wa.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    t.wb.resize(t.wa.size());
    t.c = std::sin(cfg.eta);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x = cfg.u[static_cast<std::size_t>(i)];
            const double y = cfg.u[static_cast<std::size_t>(n + j)];
            const std::size_t idx =
                static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(j);
            t.wa[idx] = std::sin(cfg.eta / 2 + x - y);
            t.wb[idx] = std::sin(cfg.eta / 2 - x + y);
        }
    }
    return t;
}

void check_cap(int order, int cap) {
    if (cap > 8) cap = 8;
    if (order > cap) throw OrderTooLarge("brute-force state sum beyond configured cap");
}

/// Partial walk state recorded after the first rows: enough to resume the
/// depth-first search independently of any other subtree.
struct Subtree {
    std::vector<int> col;  // inclusive column prefix sums so far
    double acc = 0.0;      // weight product of the rows already placed
};

/// Weighted depth-first walk over matrix entries.  Entries are tried in the
/// fixed order -1, 0, +1, so the traversal (hence the floating-point
/// summation order within one walker) never depends on anything external.
struct Walker {
    const WeightTables* t = nullptr;
    int stop_row = 0;                  // recursion pauses when this row is reached
    std::vector<Subtree>* out = nullptr;  // record subtrees here, or sum if null
    std::vector<int> col;
    double sum = 0.0;

    void rows_from(int i, double acc) {
        if (i == stop_row) {
            if (out)
                out->push_back({col, acc});
            else
                sum += acc;
            return;
        }
        cell(i, 0, 0, acc);
    }

    void cell(int i, int j, int rho, double acc) {
        const int n = t->n;
        const std::size_t idx =
            static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(j);
        for (int e = -1; e <= 1; ++e) {
            const int r2 = rho + e;                          // row prefix incl. e
            const int b2 = col[static_cast<std::size_t>(j)] + e;  // column prefix incl. e
            if (r2 < 0 || r2 > 1 || b2 < 0 || b2 > 1) continue;
            // Nonzero entries carry the c weight; zeros carry a when the
            // two inclusive prefixes agree and b when they differ.
            const double w = e != 0 ? t->c : (r2 == b2 ? t->wa[idx] : t->wb[idx]);
            col[static_cast<std::size_t>(j)] = b2;
            if (j + 1 == n) {
                if (r2 == 1) rows_from(i + 1, acc * w);
            } else {
                cell(i, j + 1, r2, acc * w);
            }
            col[static_cast<std::size_t>(j)] = b2 - e;
        }
    }
};

}  // namespace

double partition_bruteforce_reference(const SpectralConfig& cfg, int cap) {
    require_order(cfg);
    const int n = cfg.order();
    check_cap(n, cap);
    double total = 0.0;
    enumerate_asms(
        n,
        [&](const Asm& a) {
            const VertexGrid g = asm_to_vertex_grid(a);
            double w = 1.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    w *= vertex_weight(g.at(i, j), cfg.u[static_cast<std::size_t>(i)],
                                       cfg.u[static_cast<std::size_t>(n + j)], cfg.eta);
            total += w;
        },
        cap > 8 ? 8 : cap);
    return total;
}

double partition_bruteforce(const SpectralConfig& cfg, int cap) {
    const WeightTables t = make_tables(cfg);
    const int n = t.n;
    check_cap(n, cap);

    if (n <= 2) {
        Walker w{&t, n, nullptr, std::vector<int>(static_cast<std::size_t>(n), 0), 0.0};
        w.rows_from(0, 1.0);
        return w.sum;
    }

    // Enumerate the subtrees below the first two rows serially, then let the
    // walkers run in parallel — each into its own slot.
    std::vector<Subtree> subtrees;
    {
        Walker collector{&t, 2, &subtrees, std::vector<int>(static_cast<std::size_t>(n), 0),
                         0.0};
        collector.rows_from(0, 1.0);
    }

    std::vector<double> partial(subtrees.size(), 0.0);
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(subtrees.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const Subtree& s = subtrees[static_cast<std::size_t>(k)];
        Walker w{&t, n, nullptr, s.col, 0.0};
        w.rows_from(2, s.acc);
        partial[static_cast<std::size_t>(k)] = w.sum;
    }

    double total = 0.0;
    for (double p : partial) total += p;  // fixed combine order
    return total;
}

}  // namespace icekernel
