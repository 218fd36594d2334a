#ifndef ICEKERNEL_FACTORIALS_HPP
#define ICEKERNEL_FACTORIALS_HPP

#include <span>
#include <vector>

#include "icekernel/bigint.hpp"

namespace icekernel {

/// n!.  Values up to the memo cap (default 512) are cached; larger arguments
/// are computed on demand.  Throws NegativeFactorial for n < 0.
BigInt factorial(long long n);

/// Adjust the factorial memo cap.  Entries already cached are kept.
void set_factorial_cache_cap(std::size_t cap);

/// Binomial coefficient C(n, k).  Requires n >= 0; returns 0 when k < 0 or
/// k > n.
BigInt binomial(long long n, long long k);

/// Exact ratio of factorial products:
///   prod_i numer[i]! / prod_j denom[j]!
/// Throws NegativeFactorial if any argument is negative, which callers use
/// to detect degenerate instances of the closed-form counts.
BigRat factorial_ratio(std::span<const long long> numer,
                       std::span<const long long> denom);

BigRat factorial_ratio(std::initializer_list<long long> numer,
                       std::initializer_list<long long> denom);

}  // namespace icekernel

#endif
