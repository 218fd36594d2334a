#ifndef ICEKERNEL_ASM_MATRIX_HPP
#define ICEKERNEL_ASM_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "icekernel/errors.hpp"

namespace icekernel {

/// Square matrix over {-1, 0, +1}.  Storage only; the alternating-sign
/// constraints are checked by is_valid_asm / require_valid below so that
/// invalid candidates can be represented (and rejected) in tests.
class Asm {
public:
    explicit Asm(int n) : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    static Asm from_rows(const std::vector<std::vector<int>>& rows);

    int order() const { return n_; }
    int at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, int v) { e_[idx(i, j)] = static_cast<std::int8_t>(v); }

    friend bool operator==(const Asm& a, const Asm& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

    std::string to_string() const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }
    int n_;
    std::vector<std::int8_t> e_;
};

/// True iff every row and column sums to 1 with all partial sums in {0, 1}
/// (equivalently: nonzero entries alternate in sign along each row and
/// column, starting and ending with +1).
bool is_valid_asm(const Asm& m);

/// Throws InvalidAsm unless is_valid_asm(m).
void require_valid(const Asm& m);

/// True iff the matrix is invariant under rotation by 180 degrees.
bool is_half_turn_symmetric(const Asm& m);

/// 1-based row index of the single +1 in the leftmost column.
int first_column_one_row(const Asm& m);

}  // namespace icekernel

#endif
