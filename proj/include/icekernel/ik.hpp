#ifndef ICEKERNEL_IK_HPP
#define ICEKERNEL_IK_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "icekernel/determinant.hpp"
#include "icekernel/errors.hpp"
#include "icekernel/spectral.hpp"

namespace icekernel {

namespace detail {

/// Shared core of the two determinant representations, templated on the
/// real type so the homogeneous limit can be taken at extended precision.
/// companion == false gives the state sum (entries sin(eta)/(a*b)); true
/// gives the companion function (entries 1/a + 1/b).  Both carry the same
/// double product of weights over the same pair-difference denominators.
template <class Real>
Real state_sum_core(const std::vector<Real>& x, const std::vector<Real>& y, const Real& eta,
                    bool companion) {
    using std::abs;
    using std::sin;
    const std::size_t n = x.size();
    const Real half = eta / 2;
    const Real tiny = std::numeric_limits<Real>::epsilon() * 100;

    std::vector<Real> m(n * n);
    Real prefactor(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Real a = sin(half + x[i] - y[j]);
            const Real b = sin(half - x[i] + y[j]);
            if (abs(a) < tiny || abs(b) < tiny)
                throw PoleInEntries("weight denominator vanishes at these parameters");
            prefactor *= a * b;
            m[i * n + j] = companion ? Real(1) / a + Real(1) / b : sin(eta) / (a * b);
        }
    }

    Real denom(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const Real s = sin(x[i] - x[k]);
            if (abs(s) < tiny)
                throw SingularConfiguration("coincident row parameters (mod pi)");
            denom *= s;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            const Real s = sin(y[k] - y[j]);
            if (abs(s) < tiny)
                throw SingularConfiguration("coincident column parameters (mod pi)");
            denom *= s;
        }
    }
    return prefactor * det_lu(std::move(m), n) / denom;
}

}  // namespace detail

/// Domain-wall state sum via its n x n determinant representation.
double ik_determinant(const SpectralConfig& cfg);

/// Companion function: same determinant shape with entries 1/a + 1/b.
/// Its product with the state sum is the half-turn symmetric state sum.
double kuperberg_companion(const SpectralConfig& cfg);

/// The state sum at the critical crossing parameter, up to a constant
/// factor: det(t_j^e) over the pole-cleared Fourier exponents e, divided by
/// prod_{j<j'} sin(u_j - u_{j'}) and rotated onto the real axis.  The
/// constant (independent of the parameters) is not included; callers check
/// or calibrate it against ik_determinant.  Requires eta == critical value.
double vandermonde_Z(const SpectralConfig& cfg, double tol = 1e-7);

/// Companion analogue of vandermonde_Z (companion exponent set).
double vandermonde_V(const SpectralConfig& cfg, double tol = 1e-7);

/// Homogeneous limit (all spectral parameters -> 0) of the state sum at the
/// critical crossing parameter, by extended-precision evaluation on a
/// symmetric spread of parameters plus one step of Richardson
/// extrapolation.  Orders up to 6.
double ik_homogeneous(int order);

/// Homogeneous limit of the companion function, same method.
double kuperberg_homogeneous(int order);

/// One-variable slice Z_n(u, 0, ..., 0) at the critical crossing parameter:
/// the 2n-1 pinned parameters collapse to zero through the same
/// extended-precision Richardson limit.  Orders up to 5.
double ik_one_free(int order, double u);

/// Companion slice V_n(u, 0, ..., 0), same method.
double kuperberg_one_free(int order, double u);

}  // namespace icekernel

#endif
