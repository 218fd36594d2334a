#ifndef ICEKERNEL_BRUTEFORCE_HPP
#define ICEKERNEL_BRUTEFORCE_HPP

#include "icekernel/spectral.hpp"

namespace icekernel {

/// State sum by direct enumeration: builds every alternating-sign matrix of
/// the given order, maps each to its six-vertex state and sums the vertex
/// weight products.  Deliberately routed through the matrix/grid layer so
/// it shares no logic with the weighted walk in partition_bruteforce.
double partition_bruteforce_reference(const SpectralConfig& cfg, int cap = 7);

/// State sum by a weighted depth-first walk over row configurations,
/// parallelized over the subtrees hanging below the first two rows.  Each
/// subtree accumulates serially into its own slot and the slots are
/// combined in a fixed order, so the result is bit-identical for any
/// thread count (and to a serial run).
double partition_bruteforce(const SpectralConfig& cfg, int cap = 7);

}  // namespace icekernel

#endif
