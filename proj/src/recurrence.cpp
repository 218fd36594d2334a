#include "icekernel/recurrence.hpp"

#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "icekernel/bigint.hpp"
#include "icekernel/fourier.hpp"
#include "icekernel/ik.hpp"
#include "icekernel/refined.hpp"
#include "icekernel/spectral.hpp"

namespace icekernel {

namespace {

constexpr double kPi = 3.14159265358979323846;

template <class Coeff>
Coeff lift_rat(const BigRat& r) {
    if constexpr (coeff_is_exact<Coeff>) {
        return Cyclotomic(r);
    } else {
        return Coeff(to_double(r), 0.0);
    }
}

/// (sqrt(3)/2)^k for any integer k, exact in the cyclotomic field.
template <class Coeff>
Coeff half_sqrt3_power(int k) {
    if constexpr (coeff_is_exact<Coeff>) {
        Cyclotomic base = Cyclotomic::sqrt3() * Cyclotomic(BigRat(1, 2));
        if (k < 0) {
            base = Cyclotomic(BigRat(1)) / base;
            k = -k;
        }
        Cyclotomic acc{BigRat(1)};
        for (int i = 0; i < k; ++i) acc = acc * base;
        return acc;
    } else {
        return Coeff(std::pow(std::sqrt(3.0) / 2.0, k), 0.0);
    }
}

template <class Coeff>
LaurentPoly<Coeff> poly_pow(const LaurentPoly<Coeff>& p, int k) {
    auto acc = LaurentPoly<Coeff>::constant(coeff_from_rat<Coeff>(1, 1));
    for (int i = 0; i < k; ++i) acc = acc * p;
    return acc;
}

/// sum_r counts[r] a^{r-1} b^{m-r} normalized by the total and by
/// (sqrt(3)/2)^{m-1}; shared by the plain and half-turn assemblies.
template <class Coeff>
LaurentPoly<Coeff> weighted_refined_poly(const RefinedTable& table) {
    const int m = static_cast<int>(table.counts.size());
    const auto wa = weight_a_hom<Coeff>();
    const auto wb = weight_b_hom<Coeff>();
    LaurentPoly<Coeff> sum;
    for (int r = 1; r <= m; ++r) {
        auto term = poly_pow(wa, r - 1) * poly_pow(wb, m - r);
        term *= lift_rat<Coeff>(BigRat(table.counts[static_cast<std::size_t>(r - 1)]));
        sum += term;
    }
    sum *= lift_rat<Coeff>(BigRat(1) / BigRat(table.total()));
    sum *= half_sqrt3_power<Coeff>(1 - m);
    return sum;
}

template <class Coeff>
void require_slice_invariants(const LaurentPoly<Coeff>& p, int max_mode,
                              const std::string& what) {
    if (!p.is_even_in_u(1e-9)) throw IdentityFailed(what + ": slice polynomial is not even");
    const Coeff at0 = p.sum_coeffs();
    if constexpr (coeff_is_exact<Coeff>) {
        if (!(at0 == Cyclotomic(BigRat(1))))
            throw IdentityFailed(what + ": value at the origin is not 1");
    } else {
        if (std::abs(at0 - Coeff(1.0, 0.0)) > 1e-9)
            throw IdentityFailed(what + ": value at the origin is not 1");
    }
    if (p.is_zero() || p.min_exp() < -max_mode || p.max_exp() > max_mode)
        throw IdentityFailed(what + ": support exceeds the predicted window");
}

}  // namespace

template <class Coeff>
ZVPairT<Coeff> zv_initial() {
    ZVPairT<Coeff> p;
    p.order = 1;
    p.z = LaurentPoly<Coeff>::constant(coeff_from_rat<Coeff>(1, 1));
    p.v = cos_multiple_u<Coeff>(1);
    return p;
}

template <class Coeff>
ZVPairT<Coeff> zv_step(const ZVPairT<Coeff>& cur) {
    const int n = cur.order;
    if (n < 1) throw Error("zv_step needs an initialized pair");
    const auto c3 = cos_multiple_u<Coeff>(3);
    const auto s2 = sin_sq_u<Coeff>();

    ZVPairT<Coeff> next;
    next.order = n + 1;
    next.z = laurent_div_exact(cur.v - c3 * cur.z, s2, 1e-8);
    next.z *= coeff_from_rat<Coeff>(2 * n + 1, 3 * (3 * n + 1));
    next.v = laurent_div_exact(cur.z - c3 * cur.v, s2, 1e-8);
    next.v *= coeff_from_rat<Coeff>(2 * n + 1, 3 * (3 * n + 2));

    require_slice_invariants(next.z, n, "z slice of order " + std::to_string(n + 1));
    require_slice_invariants(next.v, n + 1, "v slice of order " + std::to_string(n + 1));
    return next;
}

template <class Coeff>
LaurentPoly<Coeff> z_from_refined(int order) {
    return weighted_refined_poly<Coeff>(refined_asm_table(order));
}

template <class Coeff>
LaurentPoly<Coeff> zv_product_from_refined(int order) {
    return weighted_refined_poly<Coeff>(refined_ht_table(2 * order));
}

template <class Coeff>
LaurentPoly<Coeff> v_from_refined(int order) {
    return laurent_div_exact(zv_product_from_refined<Coeff>(order),
                             z_from_refined<Coeff>(order), 1e-8);
}

template ZVPairT<std::complex<double>> zv_initial<std::complex<double>>();
template ZVPairT<Cyclotomic> zv_initial<Cyclotomic>();
template ZVPairT<std::complex<double>> zv_step<std::complex<double>>(
    const ZVPairT<std::complex<double>>&);
template ZVPairT<Cyclotomic> zv_step<Cyclotomic>(const ZVPairT<Cyclotomic>&);
template LaurentPoly<std::complex<double>> z_from_refined<std::complex<double>>(int);
template LaurentPoly<Cyclotomic> z_from_refined<Cyclotomic>(int);
template LaurentPoly<std::complex<double>> zv_product_from_refined<std::complex<double>>(int);
template LaurentPoly<Cyclotomic> zv_product_from_refined<Cyclotomic>(int);
template LaurentPoly<std::complex<double>> v_from_refined<std::complex<double>>(int);
template LaurentPoly<Cyclotomic> v_from_refined<Cyclotomic>(int);

namespace {

CPoly sin_multiple_poly(int k) {
    CPoly p;
    p.set(k, std::complex<double>(0.0, -0.5));
    p.set(-k, std::complex<double>(0.0, 0.5));
    return p;
}

/// Least-squares proportionality constant of lhs against rhs over the union
/// of their modes, then the largest leftover coefficient relative to the
/// largest lhs coefficient.
double fit_residual(const CPoly& lhs, const CPoly& rhs) {
    std::map<int, std::pair<std::complex<double>, std::complex<double>>> merged;
    for (const auto& [e, v] : lhs.terms()) merged[e].first = v;
    for (const auto& [e, v] : rhs.terms()) merged[e].second = v;

    std::complex<double> num(0.0, 0.0);
    double den = 0.0;
    for (const auto& [e, pair] : merged) {
        num += std::conj(pair.second) * pair.first;
        den += std::norm(pair.second);
    }
    if (den < 1e-300) throw DegenerateFit("nothing to fit the proportionality against");
    const std::complex<double> alpha = num / den;

    double resid = 0.0;
    for (const auto& [e, pair] : merged)
        resid = std::max(resid, std::abs(pair.first - alpha * pair.second));
    return resid / std::max(1e-300, lhs.max_abs());
}

}  // namespace

RecurrenceCheck check_fg_recurrence(int order, const std::vector<double>& params,
                                    double corrupt) {
    const int n = order;
    if (n < 1) throw Error("recurrence check needs a positive order");
    if (params.size() != static_cast<std::size_t>(2 * n + 1))
        throw Error("recurrence check needs the 2n+1 pinned parameters of the next order");

    const std::vector<double> small(params.begin(), params.end() - 2);
    const double ua = params[static_cast<std::size_t>(2 * n - 1)];
    const double ub = params[static_cast<std::size_t>(2 * n)];

    const CPoly fs = f_poly(small, kCriticalEta);
    const CPoly gs = g_poly(small, kCriticalEta);
    const std::complex<double> fa = fs.evaluate(ua) * (1.0 + corrupt);
    const std::complex<double> fb = fs.evaluate(ub);
    const std::complex<double> ga = gs.evaluate(ua);
    const std::complex<double> gb = gs.evaluate(ub);
    const double ca = std::cos(3 * ua), sa = std::sin(3 * ua);
    const double cb = std::cos(3 * ub), sb = std::sin(3 * ub);
    const double sdiff = std::sin(3 * (ub - ua));

    const CPoly cos3 = cos_multiple_u<std::complex<double>>(3);
    const CPoly sin3 = sin_multiple_poly(3);

    // det of the three-column matrix expanded down its first column.  The
    // rows are (cos 3u h(u), sin 3u h(u), k(u)); the other two columns pin
    // the free variable to the last two parameters.
    const auto assemble = [&](const CPoly& h, const CPoly& k, std::complex<double> ha,
                              std::complex<double> hb, std::complex<double> ka,
                              std::complex<double> kb) {
        CPoly out = cos3 * h * (sa * ha * kb - sb * hb * ka);
        out -= sin3 * h * (ca * ha * kb - cb * hb * ka);
        out += k * (ha * hb * sdiff);
        return out;
    };

    RecurrenceCheck rep;
    rep.order = n;
    rep.residual_f =
        fit_residual(f_poly(params, kCriticalEta), assemble(fs, gs, fa, fb, ga, gb));
    rep.residual_g =
        fit_residual(g_poly(params, kCriticalEta), assemble(gs, fs, ga, gb, fa, fb));
    return rep;
}

double s_function(const std::vector<double>& fixed, double probe) {
    if (fixed.empty() || fixed.size() % 2 == 0)
        throw Error("constant extraction needs 2n-1 pinned parameters");
    const int n = static_cast<int>(fixed.size() + 1) / 2;

    double denom = 1.0;
    for (double ui : fixed) {
        const double s = std::sin(kPi / 3 + probe - ui);
        if (std::abs(s) < 1e-6)
            throw ProbePole("probe point hits a pole of the extraction formula");
        denom *= s;
    }

    const auto eval_pair = [&](double first) {
        SpectralConfig cfg;
        cfg.eta = kCriticalEta;
        cfg.u.reserve(fixed.size() + 1);
        cfg.u.push_back(first);
        cfg.u.insert(cfg.u.end(), fixed.begin(), fixed.end());
        try {
            return std::pair{ik_determinant(cfg), kuperberg_companion(cfg)};
        } catch (const PoleInEntries&) {
            throw ProbePole("probe point collides with a pinned parameter");
        } catch (const SingularConfiguration&) {
            throw ProbePole("probe point collides with a pinned parameter");
        }
    };

    const auto [z1, v1] = eval_pair(probe);
    const auto [z2, v2] = eval_pair(probe + 2 * kPi / 3);

    const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
    return sign * (16.0 / 3.0) * (v1 * z2 - z1 * v2) / denom;
}

double s_function_closed(const std::vector<double>& fixed) {
    if (fixed.empty() || fixed.size() % 2 == 0)
        throw Error("constant extraction needs 2n-1 pinned parameters");
    const int n = static_cast<int>(fixed.size() + 1) / 2;
    const double last = fixed.back();

    // The first factor of each product evaluates the order-n functions at a
    // parameter that also sits in the pinned set, where the determinant
    // formula degenerates; the polynomial form has no such problem.
    const double vn = v_poly_in_u(fixed, kCriticalEta).evaluate(last).real();
    const double zn = z_poly_in_u(fixed, kCriticalEta).evaluate(last).real();

    double z_small = 1.0, v_small = 1.0;  // order-0 state sums are defined as 1
    if (n > 1) {
        SpectralConfig cfg;
        cfg.eta = kCriticalEta;
        cfg.u.assign(fixed.begin(), fixed.end() - 1);
        z_small = ik_determinant(cfg);
        v_small = kuperberg_companion(cfg);
    }
    return (16.0 / 3.0) * (vn * z_small + zn * v_small);
}

HomRecurrenceReport check_homogeneous_recurrence(int order, int corrupt_order,
                                                 double corrupt_factor) {
    const int n = order;
    if (n < 1) throw Error("homogeneous recurrence check needs a positive order");

    const auto a_const = [&](int k) {
        double v = (k == 0) ? 1.0 : static_cast<double>(asm_total(k));
        if (k == corrupt_order) v *= corrupt_factor;
        return v;
    };
    const double s32 = std::sqrt(3.0) / 2.0;
    const auto z_const = [&](int k) { return std::pow(s32, k * k) * a_const(k); };
    const auto v_const = [&](int k) {
        return (k == 0) ? 1.0
                        : std::pow(s32, k * k) *
                              static_cast<double>(ht_total(2 * k)) / a_const(k);
    };

    using C = std::complex<double>;
    const LaurentPoly<C> zn = z_from_refined<C>(n);
    const LaurentPoly<C> vn = v_from_refined<C>(n);
    const LaurentPoly<C> znext = z_from_refined<C>(n + 1);

    // Unnormalized recurrence, cross-multiplied so both sides are plain
    // polynomials: next slice times 16 (V_n Z_{n-1} + Z_n V_{n-1}) sin^2 u
    // against 9 Z_n^2 V_n (v_n - cos 3u z_n).
    const double bracket = 16.0 * (v_const(n) * z_const(n - 1) + z_const(n) * v_const(n - 1));
    LaurentPoly<C> lhs = znext * sin_sq_u<C>();
    lhs *= C(z_const(n + 1) * bracket, 0.0);

    LaurentPoly<C> rhs = vn - cos_multiple_u<C>(3) * zn;
    rhs *= C(9.0 * z_const(n) * z_const(n) * v_const(n), 0.0);

    HomRecurrenceReport rep;
    rep.order = n;
    rep.residual = max_abs_diff(lhs, rhs) / std::max(1.0, lhs.max_abs());
    return rep;
}

double zv_product_check(int order, int samples) {
    if (order < 1 || order > 5) throw Error("zv product check supports orders 1..5");
    if (samples < 2) throw Error("zv product check needs at least two sample points");
    using C = std::complex<double>;
    const LaurentPoly<C> z_ref = z_from_refined<C>(order);
    const LaurentPoly<C> p_ref = zv_product_from_refined<C>(order);

    const double z0 = ik_one_free(order, 0.0);
    const double v0 = kuperberg_one_free(order, 0.0);

    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double u = -0.6 + 1.2 * k / (samples - 1);
        const double z_slice = ik_one_free(order, u) / z0;
        const double v_slice = kuperberg_one_free(order, u) / v0;
        worst = std::max(worst, std::abs(z_ref.evaluate(u).real() - z_slice));
        worst = std::max(worst, std::abs(p_ref.evaluate(u).real() - z_slice * v_slice));
    }
    return worst;
}

}  // namespace icekernel
