#include "icekernel/ik.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <complex>

#include "icekernel/fourier.hpp"

namespace icekernel {

namespace {

std::vector<double> x_part(const SpectralConfig& cfg) {
    const std::size_t n = static_cast<std::size_t>(cfg.order());
    return {cfg.u.begin(), cfg.u.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<double> y_part(const SpectralConfig& cfg) {
    const std::size_t n = static_cast<std::size_t>(cfg.order());
    return {cfg.u.begin() + static_cast<std::ptrdiff_t>(n), cfg.u.end()};
}

}  // namespace

double ik_determinant(const SpectralConfig& cfg) {
    require_order(cfg);
    return detail::state_sum_core(x_part(cfg), y_part(cfg), cfg.eta, false);
}

double kuperberg_companion(const SpectralConfig& cfg) {
    require_order(cfg);
    return detail::state_sum_core(x_part(cfg), y_part(cfg), cfg.eta, true);
}

namespace {

double power_determinant(const SpectralConfig& cfg, const FourierSupportSpec& spec, double tol) {
    require_order(cfg);
    if (std::abs(cfg.eta - kCriticalEta) > 1e-6)
        throw Error("power-determinant representation holds only at the critical "
                    "crossing parameter");
    const std::size_t m = cfg.u.size();

    std::vector<std::complex<double>> a(m * m);
    for (std::size_t r = 0; r < m; ++r) {
        const double e = static_cast<double>(spec.exponents[r]);
        for (std::size_t j = 0; j < m; ++j) a[r * m + j] = std::polar(1.0, e * cfg.u[j]);
    }
    const std::complex<double> det = det_lu(std::move(a), m);

    double denom = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = j + 1; k < m; ++k) {
            const double s = std::sin(cfg.u[j] - cfg.u[k]);
            if (std::abs(s) < 1e-12)
                throw SingularConfiguration("coincident parameters (mod pi)");
            denom *= s;
        }
    }

    // The exponent set is closed under negation, so conjugating the matrix
    // reverses its 2n rows; the ratio is therefore real for even order and
    // pure imaginary for odd order.  Rotate the odd case onto the real axis.
    std::complex<double> q = det / denom;
    if (cfg.order() % 2 != 0) q *= std::complex<double>(0.0, -1.0);
    if (std::abs(q.imag()) > tol * std::max(1.0, std::abs(q.real())))
        throw NonRealResult("power-determinant ratio is not real after phase rotation");
    return q.real();
}

}  // namespace

double vandermonde_Z(const SpectralConfig& cfg, double tol) {
    return power_determinant(cfg, FourierSupportSpec::for_f(cfg.order()), tol);
}

double vandermonde_V(const SpectralConfig& cfg, double tol) {
    return power_determinant(cfg, FourierSupportSpec::for_g(cfg.order()), tol);
}

namespace {

// 100 decimal digits: the determinant entries collapse toward a rank-one
// matrix as the spread shrinks, cancelling ~3*order*(order-1) digits at
// spread 1e-3, so double precision is hopeless while 100 digits keep orders
// up to 6 comfortably accurate.
using MpReal = boost::multiprecision::cpp_bin_float_100;

double homogeneous_limit(int order, bool companion) {
    if (order < 1 || order > 6) throw Error("homogeneous limit supports orders 1..6");
    const MpReal eta = boost::math::constants::pi<MpReal>() * 2 / 3;
    const std::size_t n = static_cast<std::size_t>(order);

    const auto eval = [&](const MpReal& eps) {
        std::vector<MpReal> x(n), y(n);
        for (std::size_t i = 0; i < 2 * n; ++i) {
            // Symmetric half-integer spread: i - (2n-1)/2.
            const MpReal w = MpReal(2 * static_cast<int>(i) - (2 * static_cast<int>(n) - 1)) / 2;
            (i < n ? x[i] : y[i - n]) = eps * w;
        }
        return detail::state_sum_core(x, y, eta, companion);
    };

    // The value is an even function of the spread (negating every parameter
    // swaps the row set with the column set, which the state sum is
    // invariant under), so halving the spread and combining kills the
    // quadratic error term and leaves O(eps^4).
    const MpReal eps{"1e-3"};
    const MpReal coarse = eval(eps);
    const MpReal fine = eval(eps / 2);
    return static_cast<double>((4 * fine - coarse) / 3);
}

double one_free_limit(int order, double u, bool companion) {
    if (order < 1 || order > 5) throw Error("one-free slice supports orders 1..5");
    const MpReal eta = boost::math::constants::pi<MpReal>() * 2 / 3;
    const std::size_t n = static_cast<std::size_t>(order);

    const auto eval = [&](const MpReal& eps) {
        std::vector<MpReal> x(n), y(n);
        x[0] = MpReal(u);
        // Pinned parameters on the symmetric integer spread -(n-1)..(n-1),
        // which negating eps maps onto itself; by the full symmetry of the
        // state sum at the critical point the value is even in eps, so one
        // Richardson step leaves O(eps^4).
        for (std::size_t i = 1; i < 2 * n; ++i) {
            const MpReal w = MpReal(static_cast<int>(i) - static_cast<int>(n));
            (i < n ? x[i] : y[i - n]) = eps * w;
        }
        return detail::state_sum_core(x, y, eta, companion);
    };

    const MpReal eps{"1e-3"};
    const MpReal coarse = eval(eps);
    const MpReal fine = eval(eps / 2);
    return static_cast<double>((4 * fine - coarse) / 3);
}

}  // namespace

double ik_homogeneous(int order) { return homogeneous_limit(order, false); }

double kuperberg_homogeneous(int order) { return homogeneous_limit(order, true); }

double ik_one_free(int order, double u) { return one_free_limit(order, u, false); }

double kuperberg_one_free(int order, double u) { return one_free_limit(order, u, true); }

}  // namespace icekernel
