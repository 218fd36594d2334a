#include "icekernel/rational_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace icekernel {

namespace {
const BigRat kZero = 0;
}

RationalPoly RationalPoly::constant(const BigRat& v) {
    return RationalPoly(std::vector<BigRat>{v});
}

RationalPoly RationalPoly::monomial(const BigRat& c, std::size_t k) {
    std::vector<BigRat> v(k + 1);
    v[k] = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRat& RationalPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

BigRat RationalPoly::eval(const BigRat& t) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const BigRat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    std::vector<BigRat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPoly(std::move(out));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
    RationalPoly r = *this;
    if (r.degree() < d.degree()) return {RationalPoly(), r};
    std::vector<BigRat> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1);
    const BigRat& lead = d.c_.back();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
        BigRat f = r.c_.back() / lead;
        q[shift] = f;
        for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= f * d.c_[i];
        r.trim();
    }
    return {RationalPoly(std::move(q)), r};
}

BigRat RationalPoly::max_abs_coeff() const {
    BigRat m = 0;
    for (const auto& c : c_) {
        BigRat a = c < 0 ? BigRat(-c) : c;
        if (a > m) m = a;
    }
    return m;
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        BigRat a = c_[k];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1) && k > 0;
        if (!unit) os << a;
        if (k == 1) os << var;
        if (k > 1) os << var << "^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace icekernel
