#include "icekernel/asm_matrix.hpp"

#include <sstream>

namespace icekernel {

Asm Asm::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    Asm m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw InvalidAsm("from_rows: ragged input");
        for (int j = 0; j < n; ++j) {
            const int v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v < -1 || v > 1) throw InvalidAsm("from_rows: entry outside {-1,0,1}");
            m.set(i, j, v);
        }
    }
    return m;
}

std::string Asm::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (j) os << ' ';
            const int v = at(i, j);
            os << (v < 0 ? "-" : (v > 0 ? "+" : "."));
        }
        os << '\n';
    }
    return os.str();
}

bool is_valid_asm(const Asm& m) {
    const int n = m.order();
    if (n <= 0) return false;
    for (int i = 0; i < n; ++i) {
        int prefix = 0;
        for (int j = 0; j < n; ++j) {
            prefix += m.at(i, j);
            if (prefix < 0 || prefix > 1) return false;
        }
        if (prefix != 1) return false;
    }
    for (int j = 0; j < n; ++j) {
        int prefix = 0;
        for (int i = 0; i < n; ++i) {
            prefix += m.at(i, j);
            if (prefix < 0 || prefix > 1) return false;
        }
        if (prefix != 1) return false;
    }
    return true;
}

void require_valid(const Asm& m) {
    if (!is_valid_asm(m)) throw InvalidAsm("matrix violates the alternating-sign constraints");
}

bool is_half_turn_symmetric(const Asm& m) {
    const int n = m.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) != m.at(n - 1 - i, n - 1 - j)) return false;
    return true;
}

int first_column_one_row(const Asm& m) {
    const int n = m.order();
    for (int i = 0; i < n; ++i)
        if (m.at(i, 0) == 1) return i + 1;
    throw InvalidAsm("no +1 in the leftmost column");
}

}  // namespace icekernel
