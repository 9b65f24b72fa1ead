#ifndef BINEDGE_GRAPH_HPP
#define BINEDGE_GRAPH_HPP

#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "binedge/errors.hpp"

namespace binedge {

inline constexpr int kInfDistance = std::numeric_limits<int>::max();

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;
// Optional per-vertex neighbor order; must list each vertex's neighbors exactly once.
using AdjacencyOrder = std::map<int, std::vector<int>>;

/// Simple undirected graph on vertices 1..n. The neighbor order of each
/// vertex is significant input data (it defines "rightmost" in the
/// caterpillar labeling sweeps) and defaults to ascending vertex id.
class Graph {
public:
    Graph() = default;
    Graph(int n, EdgeList edges, const AdjacencyOrder& order = {});

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Canonical edge list: each pair (u, v) with u < v, sorted lexicographically.
    const EdgeList& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    /// Neighbors in the significant (input) order.
    const std::vector<int>& neighbors(int v) const;
    /// Neighbors in ascending id order, independent of input order.
    const std::vector<int>& sorted_neighbors(int v) const;
    int degree(int v) const;
    void check_vertex(int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    EdgeList edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> adj_sorted_;
    std::vector<std::vector<char>> mat_;
};

/// Bijection 1..n -> 1..n; label(v) is the new name of vertex v.
class Labeling {
public:
    Labeling() = default;
    /// labels[k] is the label of vertex k+1.
    explicit Labeling(std::vector<int> labels);
    static Labeling identity(int n);

    int n() const { return static_cast<int>(labels_.size()); }
    int operator()(int v) const;
    const std::vector<int>& to_vector() const { return labels_; }
    Labeling inverse() const;
    /// Composition with i -> n - i + 1, turning label 1 into label n.
    Labeling reversed() const;
    bool operator==(const Labeling& o) const { return labels_ == o.labels_; }

private:
    std::vector<int> labels_;
};

/// Rename vertex v to lab(v); adjacency order is transported along.
Graph apply_labeling(const Graph& g, const Labeling& lab);

/// Shortest-path edge count, kInfDistance when u and v are in different components.
int distance(const Graph& g, int u, int v);
/// Full distance matrix, (n+1)x(n+1), entry [u][v]; kInfDistance off-component.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

/// Connected components of the induced subgraph on [n] \ s; each component
/// sorted ascending, the list sorted by minimum element.
std::vector<std::vector<int>> components_without(const Graph& g, const std::vector<int>& s);

bool is_connected(const Graph& g);

struct GraphClass {
    bool is_connected = false;
    bool is_tree = false;
    bool is_path = false;
    bool is_cycle = false;
    bool is_caterpillar = false;
    EdgeList bridges;
    int triangle_count = 0;
};

GraphClass classify(const Graph& g);

/// Graph on the same vertices with {u,v} an edge iff 1 <= d(u,v) <= 2.
Graph square(const Graph& g);

/// Bipartite graph on {x_1..x_n} u {y_1..y_n} with an edge (x_i, y_j) per
/// graph edge {i,j}, i < j. Pairs always satisfy i < j.
struct BipartiteStar {
    int n = 0;
    EdgeList star_edges; // (i, j) meaning x_i ~ y_j, i < j
    BipartiteStar() = default;
    BipartiteStar(int n, EdgeList edges);
    bool operator==(const BipartiteStar& o) const { return n == o.n && star_edges == o.star_edges; }
};

BipartiteStar star_transform(const Graph& g);
Graph unstar(const BipartiteStar& h);
/// The star as a plain graph on 2n vertices: x_i -> i, y_j -> n + j.
Graph star_as_graph(const BipartiteStar& h);

/// Edge count of a longest induced path. Trees use the diameter double sweep
/// (every tree path is induced); other graphs use exhaustive search guarded
/// by max_n_guard.
int longest_induced_path_length(const Graph& g, int max_n_guard = 16);

/// Diameter path of a tree: sweep from the smallest-id vertex of maximum
/// eccentricity, ties broken by smallest id. Unique in a tree once the
/// endpoints are fixed.
std::vector<int> tree_diameter_path(const Graph& t);

} // namespace binedge

#endif
