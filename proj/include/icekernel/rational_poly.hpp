#ifndef ICEKERNEL_RATIONAL_POLY_HPP
#define ICEKERNEL_RATIONAL_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "icekernel/bigint.hpp"

namespace icekernel {

/// Dense polynomial in one variable with exact rational coefficients.
/// Trailing zero coefficients are stripped, so degree() == size - 1 and the
/// zero polynomial has an empty coefficient vector.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RationalPoly constant(const BigRat& v);
    /// Monomial c * t^k.
    static RationalPoly monomial(const BigRat& c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigRat>& coeffs() const { return c_; }
    /// Coefficient of t^k (0 beyond the stored degree).
    const BigRat& coeff(std::size_t k) const;

    BigRat eval(const BigRat& t) const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const BigRat& s);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(RationalPoly a, const BigRat& s) { return a *= s; }
    friend RationalPoly operator*(const BigRat& s, RationalPoly a) { return a *= s; }
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    /// Exact Euclidean division: returns {quotient, remainder} with
    /// *this == quotient * d + remainder and deg(remainder) < deg(d).
    std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const;

    /// Largest coefficient magnitude, as a rational (0 for the zero poly).
    BigRat max_abs_coeff() const;

    /// Render like "2 + 3t + 3t^2" (or "0").
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigRat> c_;
};

}  // namespace icekernel

#endif
