#ifndef BINEDGE_BETTI_HPP
#define BINEDGE_BETTI_HPP

#include <array>
#include <vector>

#include "binedge/graph.hpp"

namespace binedge {

/// beta_{1,3} of an edge ideal by direct triple counting: a 3-subset
/// contributes 1 when it induces exactly two edges and 2 when it induces a
/// triangle.
struct BettiCertificate {
    int beta13 = 0;
    struct Triple {
        std::array<int, 3> w;
        int rank = 0;
    };
    std::vector<Triple> contributing_triples;
};

BettiCertificate beta13_edge_ideal(const Graph& h);

/// Basis count identity for trees labeled with d(i, i+1) <= 2:
/// |basis| = n - 1 + beta13 of the edge ideal of the bipartite transform.
struct Cor37Result {
    int lhs = 0; // basis size
    int rhs = 0; // n-1 + beta13
    int beta13 = 0;
    bool equal = false;
};

Cor37Result verify_cor37(const Graph& t);

/// General identity for a labeling with basis degrees <= 3:
/// |basis| = |E| + beta13 - 2 * (number of triangles).
struct RemarkResult {
    int lhs = 0;
    int rhs = 0;
    int beta13 = 0;
    int triangles = 0;
    bool equal = false;
};

RemarkResult verify_general_remark(const Graph& g);

} // namespace binedge

#endif
