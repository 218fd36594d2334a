#include "icekernel/vertex.hpp"

#include <cmath>

#include "icekernel/errors.hpp"

namespace icekernel {

char vertex_letter(VertexKind k) {
    switch (k) {
        case VertexKind::A1:
        case VertexKind::A2:
            return 'a';
        case VertexKind::B1:
        case VertexKind::B2:
            return 'b';
        default:
            return 'c';
    }
}

double boltzmann_weight(char kind, double x, double y, double eta) {
    switch (kind) {
        case 'a':
            return std::sin(eta / 2 + x - y);
        case 'b':
            return std::sin(eta / 2 - x + y);
        case 'c':
            return std::sin(eta);
        default:
            throw Error("unknown weight class");
    }
}

double vertex_weight(VertexKind k, double x, double y, double eta) {
    return boltzmann_weight(vertex_letter(k), x, y, eta);
}

VertexGrid asm_to_vertex_grid(const Asm& m) {
    require_valid(m);
    const int n = m.order();
    VertexGrid g;
    g.n = n;
    g.kinds.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));

    // Column prefix sums, updated row by row.  rho is the row prefix sum
    // including the current entry; both prefixes stay in {0, 1} for a valid
    // matrix, which require_valid has already established.
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int rho = 0;
        for (int j = 0; j < n; ++j) {
            const int e = m.at(i, j);
            rho += e;
            col[static_cast<std::size_t>(j)] += e;
            const int gamma = col[static_cast<std::size_t>(j)];
            VertexKind k;
            if (e == 1) {
                k = VertexKind::C1;
            } else if (e == -1) {
                k = VertexKind::C2;
            } else if (rho == gamma) {
                k = rho ? VertexKind::A2 : VertexKind::A1;
            } else {
                k = rho ? VertexKind::B2 : VertexKind::B1;
            }
            g.kinds[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j)] = k;
        }
    }
    return g;
}

namespace {

// Arrow orientations on the four edges of each vertex type, encoded as
// (left points right, right points right, top points down, bottom points
// down).  With domain-wall boundaries the outer horizontal arrows point
// inward and the outer vertical arrows point outward.
struct Arrows {
    int left, right, top, bottom;
};

Arrows arrows_of(VertexKind k) {
    switch (k) {
        case VertexKind::A1:
            return {1, 1, 0, 0};
        case VertexKind::A2:
            return {0, 0, 1, 1};
        case VertexKind::B1:
            return {1, 1, 1, 1};
        case VertexKind::B2:
            return {0, 0, 0, 0};
        case VertexKind::C1:
            return {1, 0, 0, 1};
        default:
            return {0, 1, 1, 0};
    }
}

}  // namespace

bool grid_arrows_consistent(const VertexGrid& g) {
    const int n = g.n;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Arrows cur = arrows_of(g.at(i, j));
            if (j == 0 && cur.left != 1) return false;
            if (j == n - 1 && cur.right != 0) return false;
            if (i == 0 && cur.top != 0) return false;
            if (i == n - 1 && cur.bottom != 1) return false;
            if (j + 1 < n && cur.right != arrows_of(g.at(i, j + 1)).left) return false;
            if (i + 1 < n && cur.bottom != arrows_of(g.at(i + 1, j)).top) return false;
        }
    }
    return true;
}

int count_c_vertices(const VertexGrid& g) {
    int count = 0;
    for (VertexKind k : g.kinds) {
        if (k == VertexKind::C1 || k == VertexKind::C2) ++count;
    }
    return count;
}

}  // namespace icekernel
