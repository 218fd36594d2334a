#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "icekernel/asm_enumerate.hpp"
#include "icekernel/asm_matrix.hpp"
#include "icekernel/errors.hpp"
#include "icekernel/refined.hpp"

using namespace icekernel;

TEST_CASE("matrix predicates") {
    const Asm id2 = Asm::from_rows({{1, 0}, {0, 1}});
    const Asm anti2 = Asm::from_rows({{0, 1}, {1, 0}});
    CHECK(is_valid_asm(id2));
    CHECK(is_valid_asm(anti2));
    CHECK(is_half_turn_symmetric(id2));
    CHECK(is_half_turn_symmetric(anti2));
    CHECK(first_column_one_row(id2) == 1);
    CHECK(first_column_one_row(anti2) == 2);

    const Asm perm132 = Asm::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    CHECK(is_valid_asm(perm132));
    CHECK(!is_half_turn_symmetric(perm132));

    const Asm bad = Asm::from_rows({{0, 1}, {0, 1}});
    CHECK(!is_valid_asm(bad));
    CHECK_THROWS_AS(require_valid(bad), InvalidAsm);
    CHECK_THROWS_AS(Asm::from_rows({{2, 0}, {0, 0}}), InvalidAsm);

    const Asm central = Asm::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
    CHECK(is_valid_asm(central));
    CHECK(is_half_turn_symmetric(central));
}

TEST_CASE("enumeration counts and validity") {
    const BigInt expected[] = {1, 2, 7, 42, 429, 7436};
    for (int n = 1; n <= 6; ++n) {
        BigInt count = 0;
        enumerate_asms(n, [&](const Asm& a) {
            ++count;
            if (n <= 4) {
                CHECK(is_valid_asm(a));
                CHECK(a.order() == n);
            }
        });
        CHECK(count == expected[n - 1]);
        CHECK(asm_total(n) == expected[n - 1]);
    }

    // No duplicates at small order.
    std::set<std::string> seen;
    enumerate_asms(4, [&](const Asm& a) { seen.insert(a.to_string()); });
    CHECK(seen.size() == 42);

    CHECK_THROWS_AS(enumerate_asms(8, [](const Asm&) {}), OrderTooLarge);
    CHECK_THROWS_AS(enumerate_asms(0, [](const Asm&) {}), Error);
}

TEST_CASE("half-turn enumeration: seam method equals filtered enumeration") {
    for (int order : {2, 4, 6}) {
        std::set<std::string> filtered, seamed;
        enumerate_asms(order, [&](const Asm& a) {
            if (is_half_turn_symmetric(a)) filtered.insert(a.to_string());
        });
        enumerate_ht_asms(order, [&](const Asm& a) {
            CHECK(is_valid_asm(a));
            CHECK(is_half_turn_symmetric(a));
            seamed.insert(a.to_string());
        });
        CHECK(filtered == seamed);
    }
    CHECK_THROWS_AS(enumerate_ht_asms(3, [](const Asm&) {}), OddOrderForHalfTurn);
    CHECK_THROWS_AS(enumerate_ht_asms(8, [](const Asm&) {}, 6), OrderTooLarge);
}

TEST_CASE("brute-force refined tables") {
    const RefinedTable t3 = brute_refined(3, AsmClass::plain);
    CHECK(t3.counts == std::vector<BigInt>{2, 3, 2});
    CHECK(t3.total() == 7);

    const RefinedTable h2 = brute_refined(2, AsmClass::half_turn);
    CHECK(h2.counts == std::vector<BigInt>{1, 1});

    const RefinedTable h4 = brute_refined(4, AsmClass::half_turn);
    CHECK(h4.counts == std::vector<BigInt>{2, 3, 3, 2});
    CHECK(h4.total() == 10);

    const RefinedTable h6 = brute_refined(6, AsmClass::half_turn);
    CHECK(h6.total() == 140);
    CHECK(h6.palindromic());

    CHECK_THROWS_AS(brute_refined(3, AsmClass::half_turn), OddOrderForHalfTurn);
    CHECK_THROWS_AS(brute_refined(8, AsmClass::half_turn), OrderTooLarge);  // needs cap opt-in
}

TEST_CASE("totals from the exact ratio chains") {
    CHECK(asm_total(1) == 1);
    CHECK(asm_total(4) == 42);
    CHECK(asm_total(7) == 218348);
    CHECK(asm_total(8) == 10850216);
    CHECK(ht_total(2) == 2);
    CHECK(ht_total(4) == 10);
    CHECK(ht_total(6) == 140);
    CHECK(ht_total(8) == 5544);
    CHECK_THROWS_AS(ht_total(3), OddOrderForHalfTurn);
}

TEST_CASE("closed-form refined counts") {
    CHECK(refined_asm_ratio(1, 1) == 1);
    CHECK(refined_asm_ratio(3, 1) == BigRat(2, 7));
    CHECK(refined_asm_ratio(3, 2) == BigRat(3, 7));
    CHECK(refined_asm_count(3, 1) == 2);
    CHECK(refined_asm_count(3, 2) == 3);
    CHECK(refined_asm_count(4, 2) == 14);

    CHECK(refined_ht_ratio(2, 1) == BigRat(1, 5));
    CHECK(refined_ht_ratio(2, 2) == BigRat(3, 10));
    CHECK(refined_ht_count(2, 1) == 2);
    CHECK(refined_ht_count(2, 2) == 3);
    CHECK(refined_ht_count(2, 3) == 3);  // palindrome half
    CHECK(refined_ht_count(2, 4) == 2);
    CHECK_THROWS_AS(refined_ht_ratio(1, 1), DegenerateOrder);
    CHECK_THROWS_AS(refined_asm_ratio(3, 4), Error);

    // Closed forms reproduce the brute-force oracle.
    for (int n = 2; n <= 6; ++n) CHECK(refined_asm_table(n) == brute_refined(n, AsmClass::plain));
    for (int two_n : {2, 4, 6})
        CHECK(refined_ht_table(two_n) == brute_refined(two_n, AsmClass::half_turn));
}

TEST_CASE("palindromes and integerness across a wide range") {
    for (int n = 1; n <= 30; ++n) {
        BigInt row_sum = 0;
        for (int r = 1; r <= n; ++r) {
            const BigInt c = refined_asm_count(n, r);  // throws NonIntegerResult on failure
            CHECK(c == refined_asm_count(n, n + 1 - r));
            row_sum += c;
        }
        CHECK(row_sum == asm_total(n));
    }
    for (int n = 2; n <= 30; ++n) {
        BigInt row_sum = 0;
        for (int r = 1; r <= 2 * n; ++r) row_sum += refined_ht_count(n, r);
        CHECK(row_sum == ht_total(2 * n));
        CHECK(refined_ht_table(2 * n).palindromic());
    }
}

TEST_CASE("generating polynomials") {
    CHECK(gen_poly_A(2) == RationalPoly({BigRat(1), BigRat(1)}));
    CHECK(gen_poly_A(3).to_string() == "2 + 3t + 2t^2");
    CHECK(gen_poly_H(4) == RationalPoly({BigRat(2), BigRat(3), BigRat(3), BigRat(2)}));
    CHECK(gen_poly_B(2) == RationalPoly({BigRat(2, 5), BigRat(1, 5), BigRat(2, 5)}));
    CHECK_THROWS_AS(gen_poly_B(1), DegenerateOrder);
}

TEST_CASE("generating-function identity holds exactly") {
    for (int n = 2; n <= 10; ++n) {
        HtIdentityReport rep;
        CHECK_NOTHROW(rep = verify_ht_identity(n));
        CHECK(rep.residual_product_form.is_zero());
        CHECK(rep.residual_factor_form.is_zero());
    }
}

TEST_CASE("half-turn order 8 via the seam search") {
    const RefinedTable h8 = brute_refined(8, AsmClass::half_turn, 8);
    CHECK(h8.total() == 5544);
    CHECK(h8.palindromic());
    CHECK(h8 == refined_ht_table(8));
}
