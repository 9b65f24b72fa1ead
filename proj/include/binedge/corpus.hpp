#ifndef BINEDGE_CORPUS_HPP
#define BINEDGE_CORPUS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "binedge/graph.hpp"

namespace binedge {

/// Deterministic RNG wrapper; draws avoid std::uniform_int_distribution so
/// streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi);
    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Star with the given center; leaves are the remaining ids in order.
Graph star_graph(int n, int center);

/// Isomorphism-class representatives of all graphs on n vertices (n <= 7).
const std::vector<Graph>& all_graphs(int n);
/// Connected representatives only.
const std::vector<Graph>& all_connected_graphs(int n);
/// Tree representatives (n <= 10).
const std::vector<Graph>& all_trees(int n);
/// Every labeled connected graph on vertex set 1..n (n <= 5).
std::vector<Graph> all_labeled_connected_graphs(int n);

/// Minimum adjacency bitmask over all vertex permutations; usable as an
/// isomorphism key for n <= 8.
std::uint64_t canonical_code(const Graph& g);
/// Canonical string of a tree (center-rooted encoding); any size.
std::string tree_code(const Graph& t);

Graph random_tree(Rng& rng, int n);
/// Random caterpillar: a path plus leaves attached to uniform positions.
Graph random_caterpillar(Rng& rng, int n);
Labeling random_labeling(Rng& rng, int n);

/// The bundled instances used throughout the test corpus.
Graph fig1_graph();  // 16-vertex spider: five spokes, two leaves each
Graph fig2_graph();  // 13-vertex caterpillar, central path of 7
Graph fig3_graph();  // 12-vertex caterpillar, central path of 7
Graph fig4_graph();  // fig3 bridged to an 11-vertex caterpillar
Graph ex25_graph();  // 5-vertex path labeled 1-4-3-5-2

} // namespace binedge

#endif
