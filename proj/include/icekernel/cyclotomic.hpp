#ifndef ICEKERNEL_CYCLOTOMIC_HPP
#define ICEKERNEL_CYCLOTOMIC_HPP

#include <array>
#include <complex>
#include <string>

#include "icekernel/bigint.hpp"

namespace icekernel {

/// Element of the degree-4 field Q(z), z = exp(i*pi/6), stored on the basis
/// {1, z, z^2, z^3} with the reduction z^4 = z^2 - 1.  At the critical
/// crossing parameter every vertex weight lies in this field, which is what
/// makes the fully exact recurrence regime possible:
///   i = z^3,  sqrt(3) = 2z - z^3,  exp(i*pi/3) = z^2.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(const BigRat& rational) : a_{rational, 0, 0, 0} {}  // NOLINT: implicit by design
    Cyclotomic(int rational) : a_{BigRat(rational), 0, 0, 0} {}    // NOLINT
    Cyclotomic(BigRat c0, BigRat c1, BigRat c2, BigRat c3)
        : a_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Cyclotomic zeta();           // z
    static Cyclotomic zeta_pow(int k);  // z^k, any integer k
    static Cyclotomic imag_unit();      // i = z^3
    static Cyclotomic sqrt3();          // 2z - z^3

    const BigRat& comp(int k) const { return a_[static_cast<std::size_t>(k)]; }
    bool is_zero() const;
    bool is_rational() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic operator-() const;
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.a_ == b.a_; }

    /// Multiplicative inverse (exact).  Throws std::domain_error on zero.
    Cyclotomic inverse() const;
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    /// Complex conjugate (z -> z^11).
    Cyclotomic conj() const;

    /// Numerical embedding with z = exp(i*pi/6).
    std::complex<double> to_complex() const;

    std::string to_string() const;

private:
    std::array<BigRat, 4> a_{BigRat(0), BigRat(0), BigRat(0), BigRat(0)};
};

}  // namespace icekernel

#endif
