#ifndef ICEKERNEL_FOURIER_HPP
#define ICEKERNEL_FOURIER_HPP

#include <complex>
#include <vector>

#include "icekernel/laurent.hpp"

namespace icekernel {

/// The exponent set of a pole-cleared state sum at the critical crossing
/// parameter.  Multiplying Z_n (resp. V_n), viewed as a function of one
/// spectral variable u, by prod sin(u - u_i) over the 2n-1 remaining
/// variables yields a finite Fourier sum in s = exp(iu); this struct lists
/// which powers of s can appear.  Both families have exactly 2n exponents,
/// closed under negation.
struct FourierSupportSpec {
    int order = 0;
    std::vector<int> exponents;  // strictly descending

    /// Support of the pole-cleared Z_n: {3n - 2k : 1 <= k <= 3n-1, 3 does
    /// not divide k}.
    static FourierSupportSpec for_f(int order);

    /// Support of the pole-cleared V_n: {3n - 2k + 1 : 1 <= k <= 3n,
    /// k != 2 mod 3}.
    static FourierSupportSpec for_g(int order);

    bool contains(int e) const;
    int max_exponent() const;
    bool is_negation_closed() const;
};

using CPoly = LaurentPoly<std::complex<double>>;

/// Pole-cleared state sum as a trigonometric polynomial of the free
/// variable: Z_n(u, fixed...) * prod_i sin(u - fixed[i]), recovered from
/// equispaced samples by an inverse discrete Fourier transform.  `fixed`
/// holds the 2n-1 pinned parameters; eta must be the critical crossing
/// value for the support prediction to hold, but sampling itself works for
/// generic eta.  All modes with |e| <= 3n + 1 are kept, including ones the
/// support spec excludes, so callers can measure the leakage outside the
/// predicted set.  Sample grids that land on a pole of the determinant
/// formula are shifted and retried; SamplingSingularity is thrown when no
/// admissible grid is found.
CPoly f_poly(const std::vector<double>& fixed, double eta);

/// Same construction applied to the companion function V_n.
CPoly g_poly(const std::vector<double>& fixed, double eta);

/// Z_n (resp. V_n) itself as a trigonometric polynomial of the free
/// variable: the pole-cleared polynomial divided back by every sin(u -
/// fixed[i]) factor via exact Laurent division.  Unlike the determinant
/// formula this form can be evaluated at u equal to one of the fixed
/// parameters, which the constant-extraction identities need.
CPoly z_poly_in_u(const std::vector<double>& fixed, double eta);
CPoly v_poly_in_u(const std::vector<double>& fixed, double eta);

}  // namespace icekernel

#endif
