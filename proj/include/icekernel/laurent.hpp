#ifndef ICEKERNEL_LAURENT_HPP
#define ICEKERNEL_LAURENT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <type_traits>
#include <utility>

#include "icekernel/bigint.hpp"
#include "icekernel/cyclotomic.hpp"
#include "icekernel/errors.hpp"

namespace icekernel {

// Trigonometric polynomials are stored as Laurent polynomials in s = exp(i*u).
// Two coefficient fields are supported: std::complex<double> for the sampling
// and verification paths, and Cyclotomic for the fully exact regime at the
// critical crossing parameter (where every coefficient lives in Q(z)).

inline bool coeff_is_zero(const std::complex<double>& c, double floor_val) {
    return std::abs(c) <= floor_val;
}
inline bool coeff_is_zero(const Cyclotomic& c, double) { return c.is_zero(); }

inline double coeff_abs(const std::complex<double>& c) { return std::abs(c); }
inline double coeff_abs(const Cyclotomic& c) { return std::abs(c.to_complex()); }

inline std::complex<double> coeff_div(const std::complex<double>& a,
                                      const std::complex<double>& b) {
    return a / b;
}
inline Cyclotomic coeff_div(const Cyclotomic& a, const Cyclotomic& b) { return a / b; }

inline std::complex<double> coeff_complex(const std::complex<double>& c) { return c; }
inline std::complex<double> coeff_complex(const Cyclotomic& c) { return c.to_complex(); }

template <class Coeff>
inline constexpr bool coeff_is_exact = false;
template <>
inline constexpr bool coeff_is_exact<Cyclotomic> = true;

/// Small exact rationals lifted into either coefficient field.
template <class Coeff>
Coeff coeff_from_rat(long long num, long long den) {
    if constexpr (coeff_is_exact<Coeff>) {
        return Cyclotomic(BigRat(num, den));
    } else {
        return Coeff(static_cast<double>(num) / static_cast<double>(den), 0.0);
    }
}

template <class Coeff>
class LaurentPoly {
public:
    using term_map = std::map<int, Coeff>;

    LaurentPoly() = default;

    static LaurentPoly constant(Coeff c) { return monomial(0, std::move(c)); }
    static LaurentPoly monomial(int e, Coeff c) {
        LaurentPoly p;
        if (!coeff_is_zero(c, 0.0)) p.c_.emplace(e, std::move(c));
        return p;
    }

    const term_map& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Coeff coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Coeff{} : it->second;
    }

    void set(int e, Coeff c) {
        if (coeff_is_zero(c, 0.0))
            c_.erase(e);
        else
            c_[e] = std::move(c);
    }

    /// Support bounds; both require a nonzero polynomial.
    int min_exp() const {
        if (c_.empty()) throw Error("min_exp of zero polynomial");
        return c_.begin()->first;
    }
    int max_exp() const {
        if (c_.empty()) throw Error("max_exp of zero polynomial");
        return c_.rbegin()->first;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, Coeff{} - v);
        return *this;
    }
    LaurentPoly& operator*=(const Coeff& s) {
        if (coeff_is_zero(s, 0.0)) {
            c_.clear();
            return *this;
        }
        for (auto& [e, v] : c_) v = v * s;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Coeff& s) { return a *= s; }
    friend LaurentPoly operator*(const Coeff& s, LaurentPoly a) { return a *= s; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    /// Multiply by s^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(e + k, v);
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& [e, v] : c_) m = std::max(m, coeff_abs(v));
        return m;
    }

    /// Value at u = 0, i.e. the plain sum of coefficients.
    Coeff sum_coeffs() const {
        Coeff s{};
        for (const auto& [e, v] : c_) s += v;
        return s;
    }

    std::complex<double> evaluate(double u) const {
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [e, v] : c_)
            acc += coeff_complex(v) * std::polar(1.0, static_cast<double>(e) * u);
        return acc;
    }

    /// True when the function of u is even, i.e. coefficients are symmetric
    /// under exponent negation.  `tol` is relative to max_abs for the
    /// floating regime and ignored for exact coefficients.
    bool is_even_in_u(double tol = 1e-9) const {
        if constexpr (coeff_is_exact<Coeff>) {
            for (const auto& [e, v] : c_)
                if (!(coeff(-e) == v)) return false;
            return true;
        } else {
            const double scale = std::max(1.0, max_abs());
            for (const auto& [e, v] : c_)
                if (coeff_abs(coeff(-e) - v) > tol * scale) return false;
            return true;
        }
    }

    /// Largest imaginary part over all coefficients (numerical regime only;
    /// real even trigonometric polynomials must have real coefficients).
    double max_imag() const {
        double m = 0.0;
        for (const auto& [e, v] : c_) m = std::max(m, std::abs(coeff_complex(v).imag()));
        return m;
    }

    /// Drop terms with |coefficient| <= floor_val (no-op for exact coefficients).
    void prune(double floor_val = 1e-12) {
        if constexpr (!coeff_is_exact<Coeff>) {
            for (auto it = c_.begin(); it != c_.end();) {
                if (coeff_abs(it->second) <= floor_val)
                    it = c_.erase(it);
                else
                    ++it;
            }
        }
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : c_) {
            if (!first) os << " + ";
            os << "(";
            if constexpr (coeff_is_exact<Coeff>)
                os << v.to_string();
            else
                os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
            os << ")";
            if (e != 0) os << "*s^" << e;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void add_term(int e, const Coeff& v) {
        auto [it, inserted] = c_.try_emplace(e, v);
        if (!inserted) {
            it->second += v;
            if (coeff_is_zero(it->second, 0.0)) c_.erase(it);
        }
    }

    term_map c_;
};

/// Exact Laurent division: num / den with the requirement that the division
/// leaves no remainder.  For exact coefficients the remainder must vanish
/// identically; for floating coefficients its magnitude must stay below
/// tol * max(1, |num|_max).  Throws InexactDivision otherwise.
template <class Coeff>
LaurentPoly<Coeff> laurent_div_exact(const LaurentPoly<Coeff>& num,
                                     const LaurentPoly<Coeff>& den, double tol = 1e-9) {
    if (den.is_zero()) throw Error("laurent_div_exact: zero divisor");
    LaurentPoly<Coeff> q;
    if (num.is_zero()) return q;

    const int den_top = den.max_exp();
    const int q_floor = num.min_exp() - den.min_exp();
    const Coeff den_lead = den.coeff(den_top);
    const double num_norm = std::max(1.0, num.max_abs());

    LaurentPoly<Coeff> r = num;
    while (!r.is_zero()) {
        const int r_top = r.max_exp();
        const int qe = r_top - den_top;
        if (qe < q_floor) break;
        const Coeff qc = coeff_div(r.coeff(r_top), den_lead);
        q.set(qe, q.coeff(qe) + qc);
        r -= den.shifted(qe) * qc;
        r.set(r_top, Coeff{});  // the top term cancels by construction
    }

    if constexpr (coeff_is_exact<Coeff>) {
        if (!r.is_zero()) throw InexactDivision("exact Laurent division left a remainder");
    } else {
        if (r.max_abs() > tol * num_norm)
            throw InexactDivision("Laurent division remainder exceeds tolerance");
    }
    return q;
}

template <class A, class B>
double max_abs_diff(const LaurentPoly<A>& a, const LaurentPoly<B>& b) {
    double m = 0.0;
    std::map<int, std::complex<double>> merged;
    for (const auto& [e, v] : a.terms()) merged[e] += coeff_complex(v);
    for (const auto& [e, v] : b.terms()) merged[e] -= coeff_complex(v);
    for (const auto& [e, v] : merged) m = std::max(m, std::abs(v));
    return m;
}

inline LaurentPoly<std::complex<double>> to_complex_poly(const LaurentPoly<Cyclotomic>& p) {
    LaurentPoly<std::complex<double>> r;
    for (const auto& [e, v] : p.terms()) r.set(e, v.to_complex());
    return r;
}

// ---- stock trigonometric building blocks ----------------------------------

/// cos(k*u) = (s^k + s^-k) / 2.
template <class Coeff>
LaurentPoly<Coeff> cos_multiple_u(int k) {
    LaurentPoly<Coeff> p;
    if (k == 0) {
        p.set(0, coeff_from_rat<Coeff>(1, 1));
        return p;
    }
    p.set(k, coeff_from_rat<Coeff>(1, 2));
    p.set(-k, coeff_from_rat<Coeff>(1, 2));
    return p;
}

/// sin^2 u = -(s^2 - 2 + s^-2) / 4.
template <class Coeff>
LaurentPoly<Coeff> sin_sq_u() {
    LaurentPoly<Coeff> p;
    p.set(2, coeff_from_rat<Coeff>(-1, 4));
    p.set(0, coeff_from_rat<Coeff>(1, 2));
    p.set(-2, coeff_from_rat<Coeff>(-1, 4));
    return p;
}

/// sin u = (s - s^-1) / (2i).
template <class Coeff>
LaurentPoly<Coeff> sin_u() {
    LaurentPoly<Coeff> p;
    if constexpr (coeff_is_exact<Coeff>) {
        const Cyclotomic minus_i_half = Cyclotomic(BigRat(-1, 2)) * Cyclotomic::imag_unit();
        p.set(1, minus_i_half);
        p.set(-1, -minus_i_half);
    } else {
        p.set(1, std::complex<double>(0.0, -0.5));
        p.set(-1, std::complex<double>(0.0, 0.5));
    }
    return p;
}

/// Homogeneous weight a(u) = sin(pi/3 + u) at the critical crossing parameter:
/// coefficient of s is z^-1 / 2 = (z - z^3)/2 and of s^-1 is z/2.
template <class Coeff>
LaurentPoly<Coeff> weight_a_hom() {
    LaurentPoly<Coeff> p;
    if constexpr (coeff_is_exact<Coeff>) {
        p.set(1, Cyclotomic(BigRat(0), BigRat(1, 2), BigRat(0), BigRat(-1, 2)));
        p.set(-1, Cyclotomic(BigRat(0), BigRat(1, 2), BigRat(0), BigRat(0)));
    } else {
        const double c = std::sqrt(3.0) / 4.0;
        p.set(1, std::complex<double>(c, -0.25));
        p.set(-1, std::complex<double>(c, 0.25));
    }
    return p;
}

/// Homogeneous weight b(u) = sin(pi/3 - u): the mirror of weight_a_hom.
template <class Coeff>
LaurentPoly<Coeff> weight_b_hom() {
    LaurentPoly<Coeff> p;
    if constexpr (coeff_is_exact<Coeff>) {
        p.set(1, Cyclotomic(BigRat(0), BigRat(1, 2), BigRat(0), BigRat(0)));
        p.set(-1, Cyclotomic(BigRat(0), BigRat(1, 2), BigRat(0), BigRat(-1, 2)));
    } else {
        const double c = std::sqrt(3.0) / 4.0;
        p.set(1, std::complex<double>(c, 0.25));
        p.set(-1, std::complex<double>(c, -0.25));
    }
    return p;
}

/// sin(u - u0) as a Laurent polynomial in s (floating regime only).
inline LaurentPoly<std::complex<double>> sin_u_minus(double u0) {
    LaurentPoly<std::complex<double>> p;
    const std::complex<double> inv2i(0.0, -0.5);  // 1/(2i)
    p.set(1, std::polar(1.0, -u0) * inv2i);
    p.set(-1, -std::polar(1.0, u0) * inv2i);
    return p;
}

}  // namespace icekernel

#endif
