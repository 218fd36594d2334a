#ifndef ICEKERNEL_BIGINT_HPP
#define ICEKERNEL_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace icekernel {

/// Arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator (the backend canonicalizes on every operation).
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigRat& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline BigInt rat_num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRat& q) { return boost::multiprecision::denominator(q); }

/// True iff q is an integer (reduced denominator is 1).
inline bool is_integer(const BigRat& q) { return rat_den(q) == 1; }

}  // namespace icekernel

#endif
