#ifndef ICEKERNEL_RECURRENCE_HPP
#define ICEKERNEL_RECURRENCE_HPP

#include <complex>
#include <vector>

#include "icekernel/cyclotomic.hpp"
#include "icekernel/laurent.hpp"

namespace icekernel {

/// Normalized one-variable slices of the state sum and its companion at the
/// critical crossing parameter with all pinned parameters at zero:
/// z_n(u) = Z_n(u,0,...,0) / Z_n(0,...,0) and v_n(u) likewise.  Both are
/// even trigonometric polynomials equal to 1 at the origin.  Coeff is
/// std::complex<double> for the floating regime or Cyclotomic for exact
/// arithmetic over the twelfth cyclotomic field.
template <class Coeff>
struct ZVPairT {
    int order = 0;
    LaurentPoly<Coeff> z, v;
};

using ZVPair = ZVPairT<std::complex<double>>;
using ZVPairExact = ZVPairT<Cyclotomic>;

/// Order 1: z_1 = 1, v_1 = cos u.
template <class Coeff>
ZVPairT<Coeff> zv_initial();

/// One step of the normalized two-term recurrence:
///   z_{n+1} = (2n+1) / (3(3n+1) sin^2 u) * (v_n - cos 3u * z_n),
///   v_{n+1} = (2n+1) / (3(3n+2) sin^2 u) * (z_n - cos 3u * v_n).
/// The divisions must be exact (IdentityFailed / InexactDivision otherwise);
/// the step also asserts evenness, value 1 at the origin and the predicted
/// support window instead of renormalizing anything.
template <class Coeff>
ZVPairT<Coeff> zv_step(const ZVPairT<Coeff>& cur);

/// z_n(u) assembled from the closed-form refined counts:
///   A_n^{-1} (sqrt(3)/2)^{1-n} sum_r A_n(r) a(u)^{r-1} b(u)^{n-r},
/// with a(u), b(u) the homogeneous vertex weights.
template <class Coeff>
LaurentPoly<Coeff> z_from_refined(int order);

/// (z_n * v_n)(u) assembled the same way from the half-turn refined counts
/// of order 2n.
template <class Coeff>
LaurentPoly<Coeff> zv_product_from_refined(int order);

/// v_n(u) = zv_product_from_refined / z_from_refined via exact Laurent
/// division; this route never consults the recurrence itself.
template <class Coeff>
LaurentPoly<Coeff> v_from_refined(int order);

extern template ZVPairT<std::complex<double>> zv_initial<std::complex<double>>();
extern template ZVPairT<Cyclotomic> zv_initial<Cyclotomic>();
extern template ZVPairT<std::complex<double>> zv_step<std::complex<double>>(
    const ZVPairT<std::complex<double>>&);
extern template ZVPairT<Cyclotomic> zv_step<Cyclotomic>(const ZVPairT<Cyclotomic>&);
extern template LaurentPoly<std::complex<double>> z_from_refined<std::complex<double>>(int);
extern template LaurentPoly<Cyclotomic> z_from_refined<Cyclotomic>(int);
extern template LaurentPoly<std::complex<double>>
zv_product_from_refined<std::complex<double>>(int);
extern template LaurentPoly<Cyclotomic> zv_product_from_refined<Cyclotomic>(int);
extern template LaurentPoly<std::complex<double>> v_from_refined<std::complex<double>>(int);
extern template LaurentPoly<Cyclotomic> v_from_refined<Cyclotomic>(int);

/// Residuals of the three-column determinant recurrence that produces the
/// pole-cleared polynomials of order n+1 from those of order n, measured at
/// one parameter configuration.  residual_f is for the state-sum direction,
/// residual_g for the companion direction (the two letters interchanged).
/// Residuals are relative to the largest output coefficient after fitting
/// the proportionality constant by least squares.
struct RecurrenceCheck {
    int order = 0;
    double residual_f = 0.0;
    double residual_g = 0.0;
};

/// Verify the determinant recurrence at the given parameters (the 2n+1
/// pinned values of the order-(n+1) polynomial).  `corrupt` multiplies one
/// interior scalar by (1 + corrupt) so callers can confirm the residual
/// actually detects a broken identity.  Throws DegenerateFit when the
/// right-hand side vanishes and there is nothing to fit.
RecurrenceCheck check_fg_recurrence(int order, const std::vector<double>& params,
                                    double corrupt = 0.0);

/// Constant-extraction function of the 2n-1 pinned parameters, evaluated
/// through the antisymmetrized probe formula at probe point `probe`.  The
/// result is independent of the probe; ProbePole is thrown when the probe
/// collides with a pole of the formula.
double s_function(const std::vector<double>& fixed, double probe);

/// The same function through its specialized closed form, which needs no
/// probe but evaluates one factor at a coinciding parameter (handled by the
/// polynomial route).  Order-0 state sums are defined as 1.
double s_function_closed(const std::vector<double>& fixed);

/// Residual of the unnormalized one-variable recurrence at homogeneous
/// pinned parameters, with the order constants taken from the enumeration
/// sequences.  corrupt_order / corrupt_factor deliberately scale one
/// matrix-count constant so tests can confirm the check has teeth.
struct HomRecurrenceReport {
    int order = 0;      // the step checked maps this order to order + 1
    double residual = 0.0;
};

HomRecurrenceReport check_homogeneous_recurrence(int order, int corrupt_order = 0,
                                                 double corrupt_factor = 1.0);

/// Compare the refined-count polynomial forms of z_n and z_n*v_n against
/// extended-precision slices of the actual state sums at `samples` points;
/// returns the largest relative deviation seen.
double zv_product_check(int order, int samples = 12);

}  // namespace icekernel

#endif
