#include "icekernel/cyclotomic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace icekernel {

Cyclotomic Cyclotomic::zeta() { return Cyclotomic(BigRat(0), BigRat(1), BigRat(0), BigRat(0)); }

Cyclotomic Cyclotomic::zeta_pow(int k) {
    // z has multiplicative order 12.
    k = ((k % 12) + 12) % 12;
    Cyclotomic r(1);
    Cyclotomic z = zeta();
    for (int i = 0; i < k; ++i) r = r * z;
    return r;
}

Cyclotomic Cyclotomic::imag_unit() { return Cyclotomic(BigRat(0), BigRat(0), BigRat(0), BigRat(1)); }

Cyclotomic Cyclotomic::sqrt3() { return Cyclotomic(BigRat(0), BigRat(2), BigRat(0), BigRat(-1)); }

bool Cyclotomic::is_zero() const {
    return a_[0] == 0 && a_[1] == 0 && a_[2] == 0 && a_[3] == 0;
}

bool Cyclotomic::is_rational() const { return a_[1] == 0 && a_[2] == 0 && a_[3] == 0; }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    for (int k = 0; k < 4; ++k) a_[static_cast<std::size_t>(k)] += o.a_[static_cast<std::size_t>(k)];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    for (int k = 0; k < 4; ++k) a_[static_cast<std::size_t>(k)] -= o.a_[static_cast<std::size_t>(k)];
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    return Cyclotomic(-a_[0], -a_[1], -a_[2], -a_[3]);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    // Raw convolution up to degree 6, then reduce with z^4 = z^2 - 1
    // (so z^5 = z^3 - z, z^6 = z^4 - z^2 = -1).
    std::array<BigRat, 7> c{};
    for (int i = 0; i < 4; ++i) {
        if (a.a_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            c[static_cast<std::size_t>(i + j)] +=
                a.a_[static_cast<std::size_t>(i)] * b.a_[static_cast<std::size_t>(j)];
        }
    }
    Cyclotomic r;
    r.a_[0] = c[0] - c[4] - c[6];
    r.a_[1] = c[1] - c[5];
    r.a_[2] = c[2] + c[4];
    r.a_[3] = c[3] + c[5];
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse: division by zero");
    // Solve (this) * x = 1 exactly: columns of M are the basis images z^j * this.
    std::array<std::array<BigRat, 5>, 4> m{};  // augmented [M | e0]
    for (int j = 0; j < 4; ++j) {
        Cyclotomic col = (*this) * zeta_pow(j);
        for (int i = 0; i < 4; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.comp(i);
    }
    m[0][4] = 1;
    // Gaussian elimination with exact pivoting on the first nonzero entry.
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int row = col; row < 4; ++row) {
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                piv = row;
                break;
            }
        }
        if (piv < 0) throw std::domain_error("Cyclotomic::inverse: singular element");
        std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(piv)]);
        const BigRat d = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int k = col; k <= 4; ++k) m[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)] /= d;
        for (int row = 0; row < 4; ++row) {
            if (row == col) continue;
            const BigRat f = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int k = col; k <= 4; ++k)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] -=
                    f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
        }
    }
    return Cyclotomic(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Cyclotomic Cyclotomic::conj() const {
    // Complex conjugation sends z to z^(-1) = z^11, so z^k maps to z^(12-k).
    Cyclotomic r;
    for (int k = 0; k < 4; ++k) {
        if (a_[static_cast<std::size_t>(k)] == 0) continue;
        r += zeta_pow((12 - k) % 12) * Cyclotomic(a_[static_cast<std::size_t>(k)]);
    }
    return r;
}

std::complex<double> Cyclotomic::to_complex() const {
    const double pi = 3.14159265358979323846;
    std::complex<double> z = std::polar(1.0, pi / 6.0);
    std::complex<double> acc(0.0, 0.0);
    std::complex<double> p(1.0, 0.0);
    for (int k = 0; k < 4; ++k) {
        acc += to_double(a_[static_cast<std::size_t>(k)]) * p;
        p *= z;
    }
    return acc;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    static const char* names[4] = {"", "z", "z^2", "z^3"};
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        const BigRat& c = a_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigRat mag = c > 0 ? c : BigRat(-c);
        if (mag != 1 || k == 0) os << mag.str();
        if (k > 0) {
            if (mag != 1) os << "*";
            os << names[k];
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace icekernel
