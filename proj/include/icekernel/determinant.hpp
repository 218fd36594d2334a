#ifndef ICEKERNEL_DETERMINANT_HPP
#define ICEKERNEL_DETERMINANT_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace icekernel {

/// Determinant of a dense matrix (row-major, n*n entries) by LU
/// decomposition with partial pivoting on |entry|.  Scalar may be real or
/// complex; abs() is found by ADL or std::abs and may return a different
/// (magnitude) type.  A singular matrix simply yields zero.  The input is
/// copied, not modified.
template <class Scalar>
Scalar det_lu(std::vector<Scalar> a, std::size_t n) {
    using std::abs;
    using Mag = decltype(abs(a[0]));
    Scalar det{1};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        Mag best = abs(a[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            Mag cand = abs(a[r * n + col]);
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (!(best > Mag{0})) return Scalar{0};
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
            det = -det;
        }
        det *= a[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const Scalar factor = a[r * n + col] / a[col * n + col];
            for (std::size_t j = col + 1; j < n; ++j) a[r * n + j] -= factor * a[col * n + j];
        }
    }
    return det;
}

}  // namespace icekernel

#endif
