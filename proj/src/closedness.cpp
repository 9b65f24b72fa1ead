#include "binedge/closedness.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace binedge {

bool is_closed_labeling(const Graph& g) {
    for (auto [i, j] : g.edges())
        for (auto [k, l] : g.edges()) {
            if (i == k && j != l && !g.has_edge(j, l)) return false;
            if (j == l && i != k && !g.has_edge(i, k)) return false;
        }
    return true;
}

int m_of_labeling(const Graph& g) {
    if (g.edge_count() == 0)
        throw DomainError(errc::empty_edge_set, "closure degree needs at least one edge");
    if (!is_connected(g))
        throw DomainError(errc::disconnected, "closure degree is defined for connected graphs");
    return max_admissible_degree(g);
}

namespace {

// Places labels 1..n one vertex at a time. After assigning label k to u,
// any induced path from an earlier vertex w (label i) to u whose interior
// vertices are unassigned or labeled below i stays admissible in every
// completion; if one has more than `bound` vertices the branch is dead.
class BoundedPlacement {
public:
    BoundedPlacement(const Graph& g, int bound, long long& nodes)
        : g_(g), bound_(bound), nodes_(nodes), label_of_(g.n() + 1, 0), vertex_of_(g.n() + 1, 0) {}

    std::optional<Labeling> run(const std::vector<int>& first_candidates) {
        if (place(1, &first_candidates)) {
            std::vector<int> labels(g_.n());
            for (int v = 1; v <= g_.n(); ++v) labels[v - 1] = label_of_[v];
            return Labeling(std::move(labels));
        }
        return std::nullopt;
    }

private:
    bool place(int k, const std::vector<int>* first) {
        if (k > g_.n()) return true;
        const std::vector<int>* cands = nullptr;
        std::vector<int> all;
        if (k == 1 && first) {
            cands = first;
        } else {
            for (int v = 1; v <= g_.n(); ++v)
                if (!label_of_[v]) all.push_back(v);
            cands = &all;
        }
        for (int u : *cands) {
            if (label_of_[u]) continue;
            ++nodes_;
            label_of_[u] = k;
            vertex_of_[k] = u;
            if (!forces_violation(u, k) && place(k + 1, nullptr)) return true;
            label_of_[u] = 0;
            vertex_of_[k] = 0;
        }
        return false;
    }

    bool forces_violation(int u, int k) {
        for (int i = k - 1; i >= 1; --i)
            if (path_exceeds(vertex_of_[i], u, i)) return true;
        return false;
    }

    // Induced path w -> u, interiors unassigned or labeled < i, with more
    // than bound_ vertices?
    bool path_exceeds(int w, int u, int i) {
        path_.assign(1, w);
        on_path_.assign(g_.n() + 1, 0);
        on_path_[w] = 1;
        return extend(u, i);
    }

    bool extend(int target, int i) {
        int tail = path_.back();
        for (int z : g_.sorted_neighbors(tail)) {
            if (on_path_[z]) continue;
            bool chord = false;
            for (size_t a = 0; a + 1 < path_.size(); ++a)
                if (g_.has_edge(path_[a], z)) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (z == target) {
                if (static_cast<int>(path_.size()) + 1 > bound_) return true;
                continue;
            }
            if (label_of_[z] != 0 && label_of_[z] >= i) continue;
            path_.push_back(z);
            on_path_[z] = 1;
            bool hit = extend(target, i);
            on_path_[z] = 0;
            path_.pop_back();
            if (hit) return true;
        }
        return false;
    }

    const Graph& g_;
    int bound_;
    long long& nodes_;
    std::vector<int> label_of_, vertex_of_;
    std::vector<int> path_;
    std::vector<char> on_path_;
};

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n + 1) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

std::vector<int> automorphism_orbit_reps(const Graph& g) {
    const int n = g.n();
    DSU dsu(n);
    std::vector<int> img(n + 1, 0);
    std::vector<char> used(n + 1, 0);
    // Enumerate all adjacency-preserving bijections; merge v with img(v).
    std::function<void(int)> search = [&](int v) {
        if (v > n) {
            for (int x = 1; x <= n; ++x) dsu.unite(x, img[x]);
            return;
        }
        for (int t = 1; t <= n; ++t) {
            if (used[t] || g.degree(t) != g.degree(v)) continue;
            bool ok = true;
            for (int w = 1; w < v && ok; ++w)
                if (g.has_edge(v, w) != g.has_edge(t, img[w])) ok = false;
            if (!ok) continue;
            img[v] = t;
            used[t] = 1;
            search(v + 1);
            used[t] = 0;
        }
    };
    search(1);
    // Smallest member of each orbit, ascending.
    std::vector<int> smallest(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        int r = dsu.find(v);
        if (!smallest[r]) smallest[r] = v;
    }
    std::vector<int> reps;
    for (int v = 1; v <= n; ++v)
        if (smallest[dsu.find(v)] == v) reps.push_back(v);
    return reps;
}

std::optional<Labeling> bounded_closure_search(const Graph& g, int max_vertices,
                                               long long& nodes, bool symmetry_prune) {
    std::vector<int> first;
    if (symmetry_prune)
        first = automorphism_orbit_reps(g);
    else
        for (int v = 1; v <= g.n(); ++v) first.push_back(v);
    BoundedPlacement search(g, max_vertices, nodes);
    return search.run(first);
}

ClosureReport closure_number(const Graph& g, int max_n, bool symmetry_prune) {
    if (g.edge_count() == 0)
        throw DomainError(errc::empty_edge_set, "closure number needs at least one edge");
    if (!is_connected(g))
        throw DomainError(errc::disconnected, "closure number is defined for connected graphs");
    if (g.n() > max_n)
        throw GuardError("closure number search limited to n <= " + std::to_string(max_n) +
                         ", got n = " + std::to_string(g.n()));
    ClosureReport report;
    // Deepen the bound until a labeling fits; each level is a full search.
    for (int bound = 2; bound <= g.n(); ++bound) {
        auto witness = bounded_closure_search(g, bound, report.searched, symmetry_prune);
        if (witness) {
            report.m = bound;
            report.witness = *witness;
            report.exhaustive = true;
            return report;
        }
    }
    throw std::logic_error("closure search must succeed at bound n");
}

Labeling cycle_labeling(int n) {
    if (n < 4) throw DomainError(errc::too_small, "cycle labeling needs n >= 4");
    std::vector<int> lab(n, 0);
    if (n % 2 == 0) {
        // Antipodal stepping: from the vertex holding label i, jump distance
        // m-1 = n/2 for label i+1, then one step forward for label i+2.
        lab[0] = 1;
        int pos = 0; // 0-based position of the vertex labeled i
        int i = 1;
        while (i < n) {
            int j = (pos + n / 2) % n;
            lab[j] = i + 1;
            if (i + 2 < n) lab[(j + 1) % n] = i + 2;
            pos = (j + 1) % n;
            i += 2;
        }
    } else {
        const int m = (n + 1) / 2 + 1;
        for (int i = 1; i < m; ++i) lab[i - 1] = 2 * i - 1;
        for (int i = m; i <= n; ++i) lab[i - 1] = 2 * (i - m + 1);
    }
    return Labeling(std::move(lab));
}

bool is_weakly_closed_labeling(const Graph& g) {
    for (auto [i, j] : g.edges()) {
        if (j <= i + 1) continue;
        for (int k = i + 1; k < j; ++k)
            if (!g.has_edge(i, k) && !g.has_edge(k, j)) return false;
    }
    return true;
}

namespace {

class WeaklyClosedPlacement {
public:
    WeaklyClosedPlacement(const Graph& g, long long& nodes)
        : g_(g), nodes_(nodes), label_of_(g.n() + 1, 0), vertex_of_(g.n() + 1, 0) {}

    std::optional<Labeling> run() {
        if (place(1)) {
            std::vector<int> labels(g_.n());
            for (int v = 1; v <= g_.n(); ++v) labels[v - 1] = label_of_[v];
            return Labeling(std::move(labels));
        }
        return std::nullopt;
    }

private:
    bool place(int k) {
        if (k > g_.n()) return true;
        for (int u = 1; u <= g_.n(); ++u) {
            if (label_of_[u]) continue;
            ++nodes_;
            label_of_[u] = k;
            vertex_of_[k] = u;
            if (!violates(u, k) && place(k + 1)) return true;
            label_of_[u] = 0;
            vertex_of_[k] = 0;
        }
        return false;
    }

    // All labels strictly between the endpoints of an edge are already
    // placed when the larger endpoint arrives, so the check is final.
    bool violates(int u, int k) {
        for (int w : g_.sorted_neighbors(u)) {
            int i = label_of_[w];
            if (i == 0 || i > k) continue;
            int lo = std::min(i, k), hi = std::max(i, k);
            for (int t = lo + 1; t < hi; ++t) {
                int z = vertex_of_[t];
                if (!g_.has_edge(z, w) && !g_.has_edge(z, u)) return true;
            }
        }
        return false;
    }

    const Graph& g_;
    long long& nodes_;
    std::vector<int> label_of_, vertex_of_;
};

} // namespace

WeaklyClosedReport weakly_closed_search(const Graph& g, int max_n) {
    if (g.n() > max_n)
        throw GuardError("weakly closed search limited to n <= " + std::to_string(max_n) +
                         ", got n = " + std::to_string(g.n()));
    WeaklyClosedReport rep;
    WeaklyClosedPlacement search(g, rep.searched);
    rep.witness = search.run();
    rep.weakly_closed = rep.witness.has_value();
    return rep;
}

bool is_weakly_closed(const Graph& g, int max_n) {
    return weakly_closed_search(g, max_n).weakly_closed;
}

namespace {

// Hamiltonian path search with connectivity and degree-availability pruning.
class HamiltonianPath {
public:
    explicit HamiltonianPath(const Graph& g) : g_(g), used_(g.n() + 1, 0) {}

    std::optional<std::vector<int>> find() {
        const int n = g_.n();
        if (n == 0) return std::nullopt;
        if (n == 1) return std::vector<int>{1};
        for (int start = 1; start <= n; ++start) {
            path_.assign(1, start);
            std::fill(used_.begin(), used_.end(), 0);
            used_[start] = 1;
            if (extend()) return path_;
        }
        return std::nullopt;
    }

private:
    bool extend() {
        const int n = g_.n();
        if (static_cast<int>(path_.size()) == n) return true;
        if (pruned()) return false;
        int cur = path_.back();
        for (int w : g_.sorted_neighbors(cur)) {
            if (used_[w]) continue;
            used_[w] = 1;
            path_.push_back(w);
            if (extend()) return true;
            path_.pop_back();
            used_[w] = 0;
        }
        return false;
    }

    bool pruned() {
        const int n = g_.n();
        int cur = path_.back();
        // Every unused vertex except the eventual endpoint needs two
        // available neighbors (the current vertex counts as one).
        int ones = 0;
        for (int v = 1; v <= n; ++v) {
            if (used_[v]) continue;
            int d = g_.has_edge(v, cur) ? 1 : 0;
            for (int w : g_.sorted_neighbors(v))
                if (!used_[w]) ++d;
            if (d == 0) return true;
            if (d == 1 && ++ones > 1) return true;
        }
        // The unused set plus the current vertex must stay connected.
        std::vector<char> seen(n + 1, 0);
        std::deque<int> q{cur};
        seen[cur] = 1;
        int reached = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g_.sorted_neighbors(v)) {
                if (seen[w] || (used_[w] && w != cur)) continue;
                seen[w] = 1;
                ++reached;
                q.push_back(w);
            }
        }
        int unused = n - static_cast<int>(path_.size());
        return reached != unused;
    }

    const Graph& g_;
    std::vector<char> used_;
    std::vector<int> path_;
};

} // namespace

Tree3Result tree_is_3closed(const Graph& t) {
    auto cls = classify(t);
    if (!cls.is_tree) throw DomainError(errc::not_a_tree, "3-closedness test requires a tree");
    if (cls.is_path)
        throw DomainError(errc::is_a_path, "a path admits a quadratic basis, not a 3-closed one");
    // A labeling with d(i, i+1) <= 2 everywhere is a Hamiltonian path in the
    // distance-2 square.
    auto ham = HamiltonianPath(square(t)).find();
    Tree3Result res;
    res.three_closed = ham.has_value();
    if (ham) {
        std::vector<int> labels(t.n());
        for (int k = 0; k < t.n(); ++k) labels[(*ham)[k] - 1] = k + 1;
        res.witness = Labeling(std::move(labels));
    }
    return res;
}

TnMembership check_Tn_membership(const BipartiteStar& h) {
    TnMembership out;
    const int n = h.n;
    std::vector<std::vector<char>> has(n + 1, std::vector<char>(n + 1, 0));
    for (auto [i, j] : h.star_edges) has[i][j] = 1; // x_i ~ y_j, i < j by invariant
    bool ok = static_cast<int>(h.star_edges.size()) == n - 1;
    for (int i = 1; i < n && ok; ++i) {
        bool cond = has[i][i + 1] != 0;
        for (int j = i + 2; j <= n && !cond; ++j)
            if (has[i][j] && has[i + 1][j]) cond = true;
        for (int j = 1; j < i && !cond; ++j)
            if (has[j][i] && has[j][i + 1]) cond = true;
        ok = cond;
    }
    out.in_family = ok;
    out.star_is_path = classify(unstar(h)).is_path;
    return out;
}

} // namespace binedge
