#ifndef BINEDGE_CATERPILLAR_HPP
#define BINEDGE_CATERPILLAR_HPP

#include <map>
#include <utility>
#include <vector>

#include "binedge/graph.hpp"

namespace binedge {

/// Central path plus, for each path vertex, its off-path neighbors in
/// adjacency order. "Rightmost" always means the last unlabeled entry of
/// that order. The path endpoints never carry off-path neighbors.
struct CaterpillarDecomposition {
    std::vector<int> central_path;
    std::map<int, std::vector<int>> leaf_neighbors;
};

/// Canonical decomposition: the diameter path convention of
/// tree_diameter_path, leaves in inherited adjacency order.
CaterpillarDecomposition decompose(const Graph& t);

/// Left-to-right sweep: v_1 first, then each path vertex followed by its
/// leaves right-to-left. Satisfies d(i, i+1) <= 2.
Labeling sweep_labeling(const Graph& t);

/// Sweep over an explicit decomposition; labels start at 1. Used by the
/// composition routines which orient paths themselves.
std::map<int, int> sweep_labels_on(const CaterpillarDecomposition& d);

enum class Alg1Variant {
    path_start, // 1 goes to a central-path vertex
    leaf_start, // 1 goes to a leaf, 2 to its support vertex
    assign_n,   // n goes to an arbitrary vertex (label reversal)
};

/// The two-phase skip labeling: forward from the start by steps of two
/// (labeling the skipped vertices' leaves on the way), a return pass from
/// the far end, and a final segment back toward the start. Every produced
/// labeling satisfies d(i, i+1) <= 2.
Labeling algorithm1_labeling(const Graph& t, int start, Alg1Variant variant);

/// A labeling with 1 at `start`, choosing path_start or leaf_start as needed.
Labeling labeling_with_one_at(const Graph& t, int start);

/// Join two labeled graphs by the bridge e = (u1 in h1, u2 in h2); both
/// labelings must assign 1 to their endpoint. h2's vertices are shifted by
/// |h1|; h1's labels are reversed, h2's shifted, so e becomes {n1, n1+1}.
std::pair<Graph, Labeling> bridge_compose(const Graph& h1, const Labeling& lab1,
                                          const Graph& h2, const Labeling& lab2,
                                          Edge e);

/// Chain composition t1 - b - t2: join1 = (vertex of t1, endpoint of b's
/// central path), join2 = (other endpoint, vertex of t2). Labels t1 with the
/// junction at n1, sweeps across b, then labels t2 upward from its junction.
std::pair<Graph, Labeling> compose_T1_B_T2(const Graph& t1, const Graph& b, const Graph& t2,
                                           Edge join1, Edge join2);

} // namespace binedge

#endif
