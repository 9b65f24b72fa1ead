#ifndef BINEDGE_ADMISSIBLE_HPP
#define BINEDGE_ADMISSIBLE_HPP

#include <map>
#include <string>
#include <vector>

#include "binedge/graph.hpp"

namespace binedge {

/// A path i = i_0, ..., i_r = j with i < j, distinct vertices, every interior
/// vertex below i or above j, and no order-preserving shortcut: no proper
/// subsequence of the interior, kept in path order, forms a path from i to j.
/// The shortcut condition is equivalent to the path being induced.
struct AdmissiblePath {
    std::vector<int> vertices;
    int lo() const { return vertices.front(); }
    int hi() const { return vertices.back(); }
    bool operator==(const AdmissiblePath& o) const { return vertices == o.vertices; }
    bool operator<(const AdmissiblePath& o) const { return vertices < o.vertices; }
};

/// One reduced-basis element u_pi * f_ij: the path, the split of its interior
/// into x-support (vertices above j) and y-support (vertices below i), and the
/// endpoint pair (i, j).
struct GroebnerElement {
    AdmissiblePath path;
    std::vector<int> x_support;
    std::vector<int> y_support;
    Edge edge;
    int degree() const { return static_cast<int>(path.vertices.size()); }
    /// Canonical text, e.g. "x3*x4*x5*(x1*y2 - x2*y1)".
    std::string to_text() const;
    bool operator==(const GroebnerElement& o) const { return path == o.path; }
};

GroebnerElement element_from_path(const AdmissiblePath& p);

/// Decide admissibility of a vertex sequence. A sequence given with i > j is
/// tested after reversal. Throws NotAPath when consecutive entries are not
/// adjacent in g.
bool is_admissible(const Graph& g, const std::vector<int>& seq);

/// All admissible paths from i to j (i < j), in lexicographic order of vertex
/// sequences. max_vertices > 0 caps the path vertex count for early exit.
std::vector<AdmissiblePath> enumerate_admissible(const Graph& g, int i, int j,
                                                 int max_vertices = 0);

/// The reduced basis: every admissible path between every pair i < j,
/// ordered by (i, j, path sequence).
std::vector<GroebnerElement> groebner_basis(const Graph& g);

/// Largest admissible path vertex count over all pairs, 0 when no edges.
int max_admissible_degree(const Graph& g);

struct BasisStats {
    int size = 0;
    int max_degree = 0;
    std::map<int, int> degree_histogram;
};

BasisStats basis_stats(const std::vector<GroebnerElement>& basis);

} // namespace binedge

#endif
