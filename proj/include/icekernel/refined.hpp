#ifndef ICEKERNEL_REFINED_HPP
#define ICEKERNEL_REFINED_HPP

#include <vector>

#include "icekernel/asm_matrix.hpp"
#include "icekernel/bigint.hpp"
#include "icekernel/rational_poly.hpp"

namespace icekernel {

enum class AsmClass { plain, half_turn };

/// Counts binned by r = row of the sole +1 in the leftmost column (index r-1).
struct RefinedTable {
    int order = 0;
    AsmClass cls = AsmClass::plain;
    std::vector<BigInt> counts;

    BigInt total() const;
    bool palindromic() const;
    friend bool operator==(const RefinedTable& a, const RefinedTable& b) {
        return a.order == b.order && a.cls == b.cls && a.counts == b.counts;
    }
};

/// Brute-force refined table by direct enumeration.  For half-turn order 8
/// the top-half seam search is used (pass cap >= 8 to opt in); all smaller
/// half-turn orders filter the plain enumeration, keeping the oracle dumb.
RefinedTable brute_refined(int order, AsmClass cls, int cap = 7);

/// Total number of alternating-sign matrices of order n, grown from the
/// base count 1 by the exact ratio of binomials.
BigInt asm_total(int n);

/// Total number of half-turn symmetric alternating-sign matrices of even
/// order.  The base count ht_total(2) = 2 comes from the brute-force oracle;
/// the growth ratio is exact.
BigInt ht_total(int two_n);

/// Refined ratio A_n(r)/A_n and the integer count A_n(r).
BigRat refined_asm_ratio(int n, int r);
BigInt refined_asm_count(int n, int r);

/// Refined ratio H_{2n}(r)/H_{2n} and the count H_{2n}(r); here n is HALF
/// the matrix order, r runs over 1..2n (the upper half via the palindrome
/// relation).  Order 2 (n = 1) lies outside the closed form's domain:
/// DegenerateOrder is thrown and callers fall back to brute force.
BigRat refined_ht_ratio(int n, int r);
BigInt refined_ht_count(int n, int r);

/// Refined tables assembled from the closed forms (half-turn order 2 comes
/// from brute force, see above).
RefinedTable refined_asm_table(int n);
RefinedTable refined_ht_table(int two_n);

/// Generating polynomials: sum_r count(r) t^{r-1}, and the rational-
/// coefficient factor polynomial linking the two families.
RationalPoly gen_poly_A(int n);
RationalPoly gen_poly_H(int two_n);
RationalPoly gen_poly_B(int n);  // n >= 2

/// Exact check of the generating-function identity in both of its forms.
/// Residuals are zero polynomials on success; IdentityFailed otherwise.
struct HtIdentityReport {
    int n = 0;
    RationalPoly residual_product_form;  // cleared of the (t^2-t+1) division
    RationalPoly residual_factor_form;   // against the explicit factor polynomial
};
HtIdentityReport verify_ht_identity(int n);

}  // namespace icekernel

#endif
