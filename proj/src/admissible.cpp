#include "binedge/admissible.hpp"

#include <algorithm>
#include <sstream>

namespace binedge {

GroebnerElement element_from_path(const AdmissiblePath& p) {
    GroebnerElement el;
    el.path = p;
    el.edge = {p.lo(), p.hi()};
    for (size_t k = 1; k + 1 < p.vertices.size(); ++k) {
        int v = p.vertices[k];
        if (v > p.hi())
            el.x_support.push_back(v);
        else
            el.y_support.push_back(v);
    }
    std::sort(el.x_support.begin(), el.x_support.end());
    std::sort(el.y_support.begin(), el.y_support.end());
    return el;
}

std::string GroebnerElement::to_text() const {
    std::ostringstream s;
    for (int v : x_support) s << "x" << v << "*";
    for (int v : y_support) s << "y" << v << "*";
    s << "(x" << edge.first << "*y" << edge.second << " - x" << edge.second << "*y"
      << edge.first << ")";
    return s.str();
}

bool is_admissible(const Graph& g, const std::vector<int>& seq_in) {
    if (seq_in.size() < 2)
        throw DomainError(errc::not_a_path, "a path needs at least two vertices");
    std::vector<int> seq = seq_in;
    for (int v : seq) g.check_vertex(v);
    for (size_t k = 0; k + 1 < seq.size(); ++k)
        if (!g.has_edge(seq[k], seq[k + 1]))
            throw DomainError(errc::not_a_path, "{" + std::to_string(seq[k]) + "," +
                                                     std::to_string(seq[k + 1]) +
                                                     "} is not an edge");
    if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
    const int i = seq.front(), j = seq.back();
    if (i == j) return false;
    std::vector<char> used(g.n() + 1, 0);
    for (int v : seq) {
        if (used[v]) return false; // condition (i)
        used[v] = 1;
    }
    for (size_t k = 1; k + 1 < seq.size(); ++k)
        if (!(seq[k] < i || seq[k] > j)) return false; // condition (ii)
    // Condition (iii): an order-preserving shortcut exists iff the path has a
    // chord, i.e. the path is not induced.
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 2; b < seq.size(); ++b)
            if (g.has_edge(seq[a], seq[b])) return false;
    return true;
}

namespace {

struct EnumState {
    const Graph& g;
    int i, j;
    int cap; // 0 = unlimited
    std::vector<int> path;
    std::vector<char> used;
    std::vector<AdmissiblePath>* out = nullptr; // null when only tracking max
    int max_seen = 0;

    void extend() {
        int tail = path.back();
        for (int w : g.sorted_neighbors(tail)) {
            if (used[w]) continue;
            if (w != j && !(w < i || w > j)) continue;
            // Induced-path extension: w may touch only the current tail.
            bool chord = false;
            for (size_t k = 0; k + 1 < path.size(); ++k)
                if (g.has_edge(path[k], w)) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (cap > 0 && static_cast<int>(path.size()) + 1 > cap) continue;
            path.push_back(w);
            used[w] = 1;
            if (w == j) {
                max_seen = std::max(max_seen, static_cast<int>(path.size()));
                if (out) out->push_back(AdmissiblePath{path});
            } else {
                extend();
            }
            used[w] = 0;
            path.pop_back();
        }
    }
};

} // namespace

std::vector<AdmissiblePath> enumerate_admissible(const Graph& g, int i, int j, int max_vertices) {
    g.check_vertex(i);
    g.check_vertex(j);
    if (i >= j)
        throw DomainError(errc::out_of_range, "enumerate_admissible requires i < j");
    std::vector<AdmissiblePath> out;
    EnumState st{g, i, j, max_vertices, {i}, std::vector<char>(g.n() + 1, 0), &out, 0};
    st.used[i] = 1;
    st.extend();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GroebnerElement> groebner_basis(const Graph& g) {
    std::vector<GroebnerElement> basis;
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j)
            for (const auto& p : enumerate_admissible(g, i, j))
                basis.push_back(element_from_path(p));
    return basis;
}

int max_admissible_degree(const Graph& g) {
    int best = 0;
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j) {
            EnumState st{g, i, j, 0, {i}, std::vector<char>(g.n() + 1, 0), nullptr, 0};
            st.used[i] = 1;
            st.extend();
            best = std::max(best, st.max_seen);
        }
    return best;
}

BasisStats basis_stats(const std::vector<GroebnerElement>& basis) {
    BasisStats st;
    st.size = static_cast<int>(basis.size());
    for (const auto& el : basis) {
        st.max_degree = std::max(st.max_degree, el.degree());
        ++st.degree_histogram[el.degree()];
    }
    return st;
}

} // namespace binedge
