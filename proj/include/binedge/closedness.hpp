#ifndef BINEDGE_CLOSEDNESS_HPP
#define BINEDGE_CLOSEDNESS_HPP

#include <optional>
#include <vector>

#include "binedge/admissible.hpp"
#include "binedge/graph.hpp"

namespace binedge {

/// Result of the exact closure-number search. m is the least, over all
/// labelings, of the largest basis element degree; witness attains it.
struct ClosureReport {
    int m = 0;
    Labeling witness;
    long long searched = 0; // search-tree nodes visited across all bound levels
    bool exhaustive = false;
};

/// Quadratic-basis condition on the given labels: edges sharing a lower
/// endpoint must have adjacent upper endpoints, and dually.
bool is_closed_labeling(const Graph& g);

/// Largest basis element degree for the graph's own labels.
/// Errors: EmptyEdgeSet, Disconnected.
int m_of_labeling(const Graph& g);

/// Exact closure number by bounded search over labelings: labels are placed
/// in increasing order and a branch dies as soon as a placed pair forces an
/// admissible path above the bound. symmetry_prune restricts the vertex of
/// label 1 to one representative per automorphism orbit.
ClosureReport closure_number(const Graph& g, int max_n = 9, bool symmetry_prune = false);

/// Decision form: a labeling whose admissible paths all have at most
/// max_vertices vertices, if one exists. nodes accumulates search size.
std::optional<Labeling> bounded_closure_search(const Graph& g, int max_vertices,
                                               long long& nodes,
                                               bool symmetry_prune = false);

/// A labeling of the cycle v_1..v_n whose closure value matches the exact
/// cycle formula: n/2+1 for even n, (n+1)/2+1 for odd n. Even n steps by
/// antipodal jumps; odd n interleaves odd and even labels.
Labeling cycle_labeling(int n);

/// Weak closedness of the given labels: for every edge {i,j} with j > i+1,
/// each intermediate k is adjacent to i or to j.
bool is_weakly_closed_labeling(const Graph& g);

struct WeaklyClosedReport {
    bool weakly_closed = false;
    std::optional<Labeling> witness;
    long long searched = 0;
};

WeaklyClosedReport weakly_closed_search(const Graph& g, int max_n = 9);
bool is_weakly_closed(const Graph& g, int max_n = 9);

struct Tree3Result {
    bool three_closed = false;
    std::optional<Labeling> witness;
};

/// Trees only (IsAPath rejects paths): decides whether a labeling exists with
/// d(i, i+1) <= 2 everywhere, via a Hamiltonian path search in square(t).
Tree3Result tree_is_3closed(const Graph& t);

struct TnMembership {
    bool in_family = false;  // conditions 1-3 on the bipartite graph
    bool star_is_path = false; // the underlying graph of h is a path
};

/// Family test for bipartite graphs with n-1 edges whose pattern forces
/// d(i, i+1) <= 2 in the underlying graph.
TnMembership check_Tn_membership(const BipartiteStar& h);

/// Orbits of the automorphism group as sorted orbit representatives.
std::vector<int> automorphism_orbit_reps(const Graph& g);

} // namespace binedge

#endif
