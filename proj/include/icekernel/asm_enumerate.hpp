#ifndef ICEKERNEL_ASM_ENUMERATE_HPP
#define ICEKERNEL_ASM_ENUMERATE_HPP

#include <functional>

#include "icekernel/asm_matrix.hpp"

namespace icekernel {

/// Visit every alternating-sign matrix of the given order exactly once, in a
/// fixed deterministic order.  The walk is a row-wise depth-first search over
/// column-prefix states (each column's running sum stays in {0,1}), so
/// memory stays O(n^2) regardless of how many matrices exist.
/// Throws OrderTooLarge when order exceeds the cap.
void enumerate_asms(int order, const std::function<void(const Asm&)>& visit, int cap = 7);

/// Visit every half-turn symmetric alternating-sign matrix of the given even
/// order exactly once.  Only the top half is searched; a candidate is
/// completed by 180-degree rotation, which yields a valid matrix exactly when
/// the seam masks of the two halves are complementary (the bottom-half prefix
/// constraints then hold automatically).  This avoids walking the full
/// matrix space, which is what makes order 8 affordable.
/// Throws OddOrderForHalfTurn / OrderTooLarge.
void enumerate_ht_asms(int order, const std::function<void(const Asm&)>& visit, int cap = 8);

}  // namespace icekernel

#endif
