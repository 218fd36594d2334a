#include "icekernel/refined.hpp"

#include <string>

#include "icekernel/asm_enumerate.hpp"
#include "icekernel/factorials.hpp"

namespace icekernel {

BigInt RefinedTable::total() const {
    BigInt s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

bool RefinedTable::palindromic() const {
    const std::size_t n = counts.size();
    for (std::size_t r = 0; r < n; ++r)
        if (counts[r] != counts[n - 1 - r]) return false;
    return true;
}

RefinedTable brute_refined(int order, AsmClass cls, int cap) {
    RefinedTable t;
    t.order = order;
    t.cls = cls;
    t.counts.assign(static_cast<std::size_t>(order), BigInt(0));
    auto bin = [&t](const Asm& a) {
        t.counts[static_cast<std::size_t>(first_column_one_row(a) - 1)] += 1;
    };
    if (cls == AsmClass::plain) {
        enumerate_asms(order, bin, cap);
    } else {
        if (order % 2 != 0)
            throw OddOrderForHalfTurn("half-turn classes exist only for even order");
        if (order <= 6) {
            enumerate_asms(
                order, [&](const Asm& a) { if (is_half_turn_symmetric(a)) bin(a); }, cap);
        } else {
            enumerate_ht_asms(order, bin, cap);
        }
    }
    return t;
}

BigInt asm_total(int n) {
    if (n < 1) throw Error("asm_total: order must be positive");
    BigRat a = 1;
    for (int k = 1; k < n; ++k) a *= BigRat(binomial(3 * k + 1, k), binomial(2 * k, k));
    if (!is_integer(a)) throw NonIntegerResult("asm_total produced a non-integer");
    return rat_num(a);
}

BigInt ht_total(int two_n) {
    if (two_n < 2 || two_n % 2 != 0)
        throw OddOrderForHalfTurn("ht_total: order must be even and positive");
    BigRat h = 2;  // order-2 base, fixed by the brute-force oracle
    for (int k = 1; 2 * k < two_n; ++k) {
        h *= BigRat(4 * binomial(3 * k, k) * binomial(3 * k + 3, k + 1),
                    3 * binomial(2 * k, k) * binomial(2 * k + 2, k + 1));
    }
    if (!is_integer(h)) throw NonIntegerResult("ht_total produced a non-integer");
    return rat_num(h);
}

BigRat refined_asm_ratio(int n, int r) {
    if (n < 1 || r < 1 || r > n) throw Error("refined_asm_ratio: need 1 <= r <= n");
    return factorial_ratio({2 * n - 1, n + r - 2, 2 * n - r - 1},
                           {n - 1, 3 * n - 2, r - 1, n - r});
}

BigInt refined_asm_count(int n, int r) {
    const BigRat c = refined_asm_ratio(n, r) * BigRat(asm_total(n));
    if (!is_integer(c)) throw NonIntegerResult("refined count A_n(r) is not an integer");
    return rat_num(c);
}

BigRat refined_ht_ratio(int n, int r) {
    if (n == 1)
        throw DegenerateOrder(
            "order-2 half-turn refined counts lie outside the closed form; use brute force");
    if (n < 1 || r < 1 || r > 2 * n) throw Error("refined_ht_ratio: need 1 <= r <= 2n");
    if (r > n) r = 2 * n - r + 1;  // palindrome half

    const BigRat prefactor =
        factorial_ratio({2 * n - 1, 2 * n - 1}, {n - 1, n - 1, 3 * n - 3, 3 * n - 1});
    BigRat sum = 0;
    for (int s = 1; s <= r; ++s) {
        const long long quad =
            static_cast<long long>(n) * n - static_cast<long long>(n) * s +
            static_cast<long long>(s - 1) * (s - 1);
        sum += BigRat(quad) *
               factorial_ratio({n + s - 3, 2 * n - s - 1, n + r - s - 1, 2 * n - r + s - 2},
                               {s - 1, n - s + 1, r - s, n - r + s - 1});
    }
    return prefactor * sum;
}

BigInt refined_ht_count(int n, int r) {
    const BigRat c = refined_ht_ratio(n, r) * BigRat(ht_total(2 * n));
    if (!is_integer(c)) throw NonIntegerResult("refined count H_2n(r) is not an integer");
    return rat_num(c);
}

RefinedTable refined_asm_table(int n) {
    RefinedTable t;
    t.order = n;
    t.cls = AsmClass::plain;
    for (int r = 1; r <= n; ++r) t.counts.push_back(refined_asm_count(n, r));
    return t;
}

RefinedTable refined_ht_table(int two_n) {
    if (two_n == 2) return brute_refined(2, AsmClass::half_turn);
    RefinedTable t;
    t.order = two_n;
    t.cls = AsmClass::half_turn;
    for (int r = 1; r <= two_n; ++r) t.counts.push_back(refined_ht_count(two_n / 2, r));
    return t;
}

namespace {
RationalPoly counts_to_poly(const RefinedTable& t) {
    std::vector<BigRat> c;
    c.reserve(t.counts.size());
    for (const auto& k : t.counts) c.emplace_back(k);
    return RationalPoly(std::move(c));
}
}  // namespace

RationalPoly gen_poly_A(int n) { return counts_to_poly(refined_asm_table(n)); }

RationalPoly gen_poly_H(int two_n) { return counts_to_poly(refined_ht_table(two_n)); }

RationalPoly gen_poly_B(int n) {
    if (n < 2) throw DegenerateOrder("factor polynomial needs order >= 2");
    const BigRat prefactor =
        BigRat(3 * n - 2) * factorial_ratio({2 * n - 1}, {n - 1, 3 * n - 1});
    std::vector<BigRat> c;
    for (int r = 1; r <= n + 1; ++r) {
        const long long quad =
            static_cast<long long>(n) * n - static_cast<long long>(n) * r +
            static_cast<long long>(r - 1) * (r - 1);
        c.push_back(prefactor * BigRat(quad) *
                    factorial_ratio({n + r - 3, 2 * n - r - 1}, {r - 1, n - r + 1}));
    }
    return RationalPoly(std::move(c));
}

HtIdentityReport verify_ht_identity(int n) {
    if (n < 2) throw DegenerateOrder("identity check needs order >= 2");
    const BigRat inv_h(1, ht_total(2 * n));
    const BigRat inv_a(1, asm_total(n));
    const BigRat inv_a1(1, asm_total(n + 1));

    const RationalPoly h = gen_poly_H(2 * n) * inv_h;
    const RationalPoly an = gen_poly_A(n) * inv_a;
    const RationalPoly an1 = gen_poly_A(n + 1) * inv_a1;

    const RationalPoly t({BigRat(0), BigRat(1)});
    const RationalPoly one = RationalPoly::constant(BigRat(1));
    const RationalPoly t_minus_1 = t - one;
    const RationalPoly quad = t * t - t + one;  // t^2 - t + 1

    // Product form, cleared of the division by (t^2 - t + 1):
    //   h(t) (t^2-t+1) = a_n(t) [ 9(3n+1)(t-1)^2/(4(2n+1)) a_{n+1}(t)
    //                             - (t+1)(t-2)(2t-1)/2 a_n(t) ]
    const RationalPoly bracket =
        an1 * t_minus_1 * t_minus_1 * BigRat(9 * (3 * n + 1), 4 * (2 * n + 1)) -
        an * (t + one) * (t - RationalPoly::constant(BigRat(2))) *
            (t * BigRat(2) - one) * BigRat(1, 2);
    HtIdentityReport rep;
    rep.n = n;
    rep.residual_product_form = h * quad - an * bracket;

    // Factor form: h(t) = a_n(t) * B_n(t).
    rep.residual_factor_form = h - an * gen_poly_B(n);

    if (!rep.residual_product_form.is_zero() || !rep.residual_factor_form.is_zero())
        throw IdentityFailed("generating-function identity residual is nonzero: [" +
                             rep.residual_product_form.to_string() + "] / [" +
                             rep.residual_factor_form.to_string() + "]");
    return rep;
}

}  // namespace icekernel
