#ifndef ICEKERNEL_VERTEX_HPP
#define ICEKERNEL_VERTEX_HPP

#include <cstdint>
#include <vector>

#include "icekernel/asm_matrix.hpp"

namespace icekernel {

/// The six vertex types.  The letter gives the weight class; the digit
/// distinguishes the two arrow patterns within a class.  C1 is the type with
/// horizontal arrows pointing in and vertical arrows pointing out (the image
/// of a +1 matrix entry); C2 is its reverse (the image of a -1).
enum class VertexKind : std::uint8_t { A1, A2, B1, B2, C1, C2 };

char vertex_letter(VertexKind k);  // 'a', 'b' or 'c'

/// Weight of a vertex class at spectral parameters (x, y):
///   a -> sin(eta/2 + x - y),  b -> sin(eta/2 - x + y),  c -> sin(eta).
double boltzmann_weight(char kind, double x, double y, double eta);
double vertex_weight(VertexKind k, double x, double y, double eta);

struct VertexGrid {
    int n = 0;
    std::vector<VertexKind> kinds;  // row-major n*n

    VertexKind at(int i, int j) const {
        return kinds[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(j)];
    }
};

/// The bijection from alternating-sign matrices to square-ice states with
/// domain-wall boundaries (arrows in at left/right, out at top/bottom).
/// Throws InvalidAsm on invalid input.
VertexGrid asm_to_vertex_grid(const Asm& m);

/// Full arrow-consistency check: every interior edge direction agrees
/// between its two endpoint vertices and the boundary matches the
/// domain-wall orientation.
bool grid_arrows_consistent(const VertexGrid& g);

int count_c_vertices(const VertexGrid& g);

}  // namespace icekernel

#endif
