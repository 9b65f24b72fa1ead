#include "binedge/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace binedge {

const char* errc_name(errc c) {
    switch (c) {
    case errc::out_of_range: return "OutOfRange";
    case errc::loop: return "Loop";
    case errc::duplicate_edge: return "Duplicate";
    case errc::not_bijective: return "NotBijective";
    case errc::not_a_path: return "NotAPath";
    case errc::disconnected: return "Disconnected";
    case errc::empty_edge_set: return "EmptyEdgeSet";
    case errc::too_small: return "TooSmall";
    case errc::not_a_tree: return "NotATree";
    case errc::is_a_path: return "IsAPath";
    case errc::not_caterpillar: return "NotCaterpillar";
    case errc::bad_start: return "BadStart";
    case errc::bad_endpoints: return "BadEndpoints";
    case errc::bad_join: return "BadJoin";
    case errc::precondition_failed: return "PreconditionFailed";
    }
    return "Unknown";
}

std::string ParseError::format(const std::string& origin, int line, const std::string& what) {
    std::ostringstream s;
    s << origin;
    if (line > 0) s << ":" << line;
    s << ": " << what;
    return s.str();
}

Graph::Graph(int n, EdgeList edges, const AdjacencyOrder& order) : n_(n) {
    if (n < 0)
        throw DomainError(errc::out_of_range, "vertex count must be nonnegative");
    mat_.assign(n_ + 1, std::vector<char>(n_ + 1, 0));
    adj_.assign(n_ + 1, {});
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw DomainError(errc::out_of_range,
                              "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} outside 1.." + std::to_string(n_));
        if (u == v)
            throw DomainError(errc::loop, "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (u > v) std::swap(u, v);
        if (mat_[u][v])
            throw DomainError(errc::duplicate_edge,
                              "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        mat_[u][v] = mat_[v][u] = 1;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    for (auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 1; v <= n_; ++v) std::sort(adj_[v].begin(), adj_[v].end());
    adj_sorted_ = adj_;
    for (auto& [v, seq] : order) {
        check_vertex(v);
        // The custom order must be a permutation of the derived neighbor set.
        std::vector<int> sorted_copy = seq;
        std::sort(sorted_copy.begin(), sorted_copy.end());
        if (sorted_copy != adj_sorted_[v])
            throw DomainError(errc::out_of_range,
                              "adjacency_order for vertex " + std::to_string(v) +
                                  " does not match its neighbor set");
        adj_[v] = seq;
    }
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return mat_[u][v] != 0;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

const std::vector<int>& Graph::sorted_neighbors(int v) const {
    check_vertex(v);
    return adj_sorted_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw DomainError(errc::out_of_range,
                          "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    std::vector<char> seen(n + 1, 0);
    for (int x : labels_) {
        if (x < 1 || x > n || seen[x])
            throw DomainError(errc::not_bijective, "labels are not a permutation of 1.." + std::to_string(n));
        seen[x] = 1;
    }
}

Labeling Labeling::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Labeling(std::move(v));
}

int Labeling::operator()(int v) const {
    if (v < 1 || v > n())
        throw DomainError(errc::out_of_range, "vertex " + std::to_string(v));
    return labels_[v - 1];
}

Labeling Labeling::inverse() const {
    std::vector<int> inv(labels_.size());
    for (int v = 1; v <= n(); ++v) inv[labels_[v - 1] - 1] = v;
    return Labeling(std::move(inv));
}

Labeling Labeling::reversed() const {
    std::vector<int> rev(labels_.size());
    const int m = n();
    for (int v = 1; v <= m; ++v) rev[v - 1] = m - labels_[v - 1] + 1;
    return Labeling(std::move(rev));
}

Graph apply_labeling(const Graph& g, const Labeling& lab) {
    if (lab.n() != g.n())
        throw DomainError(errc::not_bijective, "labeling size " + std::to_string(lab.n()) +
                                                   " does not match vertex count " + std::to_string(g.n()));
    EdgeList edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(lab(u), lab(v));
    AdjacencyOrder order;
    for (int v = 1; v <= g.n(); ++v) {
        std::vector<int> seq;
        seq.reserve(g.neighbors(v).size());
        for (int w : g.neighbors(v)) seq.push_back(lab(w));
        order[lab(v)] = std::move(seq);
    }
    return Graph(g.n(), std::move(edges), order);
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n() + 1, kInfDistance);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.sorted_neighbors(v))
            if (dist[w] == kInfDistance) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

} // namespace

int distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    return bfs_distances(g, u)[v];
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> d(g.n() + 1);
    d[0].assign(g.n() + 1, kInfDistance);
    for (int v = 1; v <= g.n(); ++v) d[v] = bfs_distances(g, v);
    return d;
}

std::vector<std::vector<int>> components_without(const Graph& g, const std::vector<int>& s) {
    std::vector<char> removed(g.n() + 1, 0);
    for (int v : s) {
        g.check_vertex(v);
        removed[v] = 1;
    }
    std::vector<char> seen(g.n() + 1, 0);
    std::vector<std::vector<int>> comps;
    for (int v = 1; v <= g.n(); ++v) {
        if (removed[v] || seen[v]) continue;
        std::vector<int> comp;
        std::deque<int> q{v};
        seen[v] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            comp.push_back(x);
            for (int w : g.sorted_neighbors(x))
                if (!removed[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // BFS from ascending v already yields components ordered by minimum element.
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return static_cast<int>(components_without(g, {}).size()) == 1;
}

namespace {

// Cut edges via the classic low-link DFS.
EdgeList find_bridges(const Graph& g) {
    int n = g.n();
    std::vector<int> tin(n + 1, -1), low(n + 1, 0);
    EdgeList out;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent_edge_to) {
        tin[v] = low[v] = timer++;
        for (int w : g.sorted_neighbors(v)) {
            if (w == parent_edge_to) continue;
            if (tin[w] != -1) {
                low[v] = std::min(low[v], tin[w]);
            } else {
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > tin[v]) out.emplace_back(std::min(v, w), std::max(v, w));
            }
        }
    };
    for (int v = 1; v <= n; ++v)
        if (tin[v] == -1) dfs(v, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

GraphClass classify(const Graph& g) {
    GraphClass c;
    const int n = g.n();
    c.is_connected = is_connected(g);
    c.is_tree = c.is_connected && g.edge_count() == n - 1;
    // Degree profiles decide paths and cycles.
    int deg1 = 0, deg2 = 0;
    int maxdeg = 0;
    for (int v = 1; v <= n; ++v) {
        int d = g.degree(v);
        maxdeg = std::max(maxdeg, d);
        if (d == 1) ++deg1;
        if (d == 2) ++deg2;
    }
    c.is_path = c.is_tree && (n == 1 || (deg1 == 2 && deg1 + deg2 == n));
    c.is_cycle = c.is_connected && n >= 3 && g.edge_count() == n && deg2 == n;
    if (c.is_tree) {
        if (c.is_path) {
            c.is_caterpillar = true;
        } else {
            // Tree whose non-leaf vertices induce a path.
            std::vector<int> spine;
            for (int v = 1; v <= n; ++v)
                if (g.degree(v) >= 2) spine.push_back(v);
            int sd1 = 0, sbig = 0;
            for (int v : spine) {
                int d = 0;
                for (int w : g.sorted_neighbors(v))
                    if (g.degree(w) >= 2) ++d;
                if (d == 1) ++sd1;
                if (d > 2) ++sbig;
            }
            // The spine of a tree is connected, so the degree profile suffices.
            c.is_caterpillar = spine.empty() || spine.size() == 1 || (sd1 == 2 && sbig == 0);
        }
    }
    c.bridges = find_bridges(g);
    for (auto [u, v] : g.edges())
        for (int w = v + 1; w <= n; ++w)
            if (g.has_edge(u, w) && g.has_edge(v, w)) ++c.triangle_count;
    return c;
}

Graph square(const Graph& g) {
    auto dm = distance_matrix(g);
    EdgeList edges;
    for (int u = 1; u <= g.n(); ++u)
        for (int v = u + 1; v <= g.n(); ++v)
            if (dm[u][v] != kInfDistance && dm[u][v] <= 2) edges.emplace_back(u, v);
    return Graph(g.n(), std::move(edges));
}

BipartiteStar::BipartiteStar(int n_, EdgeList edges) : n(n_), star_edges(std::move(edges)) {
    for (auto [i, j] : star_edges) {
        if (i < 1 || j < 1 || i > n || j > n)
            throw DomainError(errc::out_of_range, "star edge outside 1.." + std::to_string(n));
        if (i >= j)
            throw DomainError(errc::out_of_range,
                              "star edge (x" + std::to_string(i) + ", y" + std::to_string(j) +
                                  ") must have i < j");
    }
    std::sort(star_edges.begin(), star_edges.end());
    star_edges.erase(std::unique(star_edges.begin(), star_edges.end()), star_edges.end());
}

BipartiteStar star_transform(const Graph& g) {
    return BipartiteStar(g.n(), g.edges());
}

Graph unstar(const BipartiteStar& h) {
    return Graph(h.n, h.star_edges);
}

Graph star_as_graph(const BipartiteStar& h) {
    EdgeList edges;
    edges.reserve(h.star_edges.size());
    for (auto [i, j] : h.star_edges) edges.emplace_back(i, h.n + j);
    return Graph(2 * h.n, std::move(edges));
}

std::vector<int> tree_diameter_path(const Graph& t) {
    auto cls = classify(t);
    if (!cls.is_tree) throw DomainError(errc::not_a_tree, "diameter path requires a tree");
    const int n = t.n();
    if (n == 1) return {1};
    // Smallest-id vertex of maximum eccentricity, then smallest farthest target.
    int best_ecc = -1, u = 1;
    for (int v = 1; v <= n; ++v) {
        auto d = bfs_distances(t, v);
        int ecc = 0;
        for (int w = 1; w <= n; ++w) ecc = std::max(ecc, d[w]);
        if (ecc > best_ecc) {
            best_ecc = ecc;
            u = v;
        }
    }
    auto du = bfs_distances(t, u);
    int v = 1, far = -1;
    for (int w = 1; w <= n; ++w)
        if (du[w] != kInfDistance && du[w] > far) {
            far = du[w];
            v = w;
        }
    // Unique u-v path in the tree, walked back from v by decreasing distance.
    std::vector<int> path{v};
    int cur = v;
    while (cur != u) {
        for (int w : t.sorted_neighbors(cur))
            if (du[w] == du[cur] - 1) {
                cur = w;
                break;
            }
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

// Longest induced path by DFS over induced extensions; feasible at guard scale.
void induced_path_dfs(const Graph& g, std::vector<int>& path, std::vector<char>& used, int& best) {
    best = std::max(best, static_cast<int>(path.size()) - 1);
    int tail = path.back();
    for (int w : g.sorted_neighbors(tail)) {
        if (used[w]) continue;
        bool chord = false;
        for (size_t k = 0; k + 1 < path.size(); ++k)
            if (g.has_edge(path[k], w)) {
                chord = true;
                break;
            }
        if (chord) continue;
        used[w] = 1;
        path.push_back(w);
        induced_path_dfs(g, path, used, best);
        path.pop_back();
        used[w] = 0;
    }
}

} // namespace

int longest_induced_path_length(const Graph& g, int max_n_guard) {
    auto cls = classify(g);
    if (cls.is_tree) {
        auto p = tree_diameter_path(g);
        return static_cast<int>(p.size()) - 1;
    }
    if (g.n() > max_n_guard)
        throw GuardError("longest induced path search limited to n <= " + std::to_string(max_n_guard));
    int best = 0;
    std::vector<char> used(g.n() + 1, 0);
    for (int v = 1; v <= g.n(); ++v) {
        std::vector<int> path{v};
        used[v] = 1;
        induced_path_dfs(g, path, used, best);
        used[v] = 0;
    }
    return best;
}

} // namespace binedge
