#include "binedge/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

namespace binedge {

int Rng::uniform(int lo, int hi) {
    // Rejection-free multiply-shift; bias is negligible for the ranges here
    // and the stream is implementation-independent.
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>((static_cast<unsigned __int128>(eng_()) * span) >> 64);
}

Graph path_graph(int n) {
    EdgeList e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    EdgeList e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    if (n >= 3) e.emplace_back(1, n);
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    EdgeList e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph star_graph(int n, int center) {
    EdgeList e;
    for (int v = 1; v <= n; ++v)
        if (v != center) e.emplace_back(std::min(v, center), std::max(v, center));
    return Graph(n, std::move(e));
}

namespace {

int pair_index(int n, int u, int v) {
    // 0-based index of unordered pair (u, v), 1 <= u < v <= n.
    int i = u - 1, j = v - 1;
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t graph_mask(const Graph& g) {
    std::uint64_t m = 0;
    for (auto [u, v] : g.edges()) m |= 1ull << pair_index(g.n(), u, v);
    return m;
}

Graph mask_to_graph(int n, std::uint64_t mask) {
    EdgeList e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (mask & (1ull << pair_index(n, u, v))) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t best = ~0ull;
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (mask & (1ull << pair_index(n, u, v))) edges.emplace_back(u, v);
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : edges) {
            int a = perm[u - 1], b = perm[v - 1];
            if (a > b) std::swap(a, b);
            code |= 1ull << pair_index(n, a, b);
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.n() > 8) throw GuardError("canonical code limited to n <= 8");
    return canonical_mask(g.n(), graph_mask(g));
}

const std::vector<Graph>& all_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    if (n > 7) throw GuardError("graph class enumeration limited to n <= 7");
    std::vector<Graph> out;
    if (n <= 1) {
        out.push_back(Graph(std::max(n, 0), {}));
    } else {
        // Extend every class on n-1 vertices by one vertex with every
        // possible neighborhood, then deduplicate canonically.
        const auto& smaller = all_graphs(n - 1);
        std::unordered_set<std::uint64_t> seen;
        for (const auto& h : smaller) {
            std::uint64_t base = 0;
            for (auto [u, v] : h.edges()) base |= 1ull << pair_index(n, u, v);
            for (std::uint64_t nb = 0; nb < (1ull << (n - 1)); ++nb) {
                std::uint64_t mask = base;
                for (int u = 1; u < n; ++u)
                    if (nb & (1ull << (u - 1))) mask |= 1ull << pair_index(n, u, n);
                std::uint64_t code = canonical_mask(n, mask);
                if (seen.insert(code).second) out.push_back(mask_to_graph(n, code));
            }
        }
    }
    return cache.emplace(n, std::move(out)).first->second;
}

const std::vector<Graph>& all_connected_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<Graph> out;
    for (const auto& g : all_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return cache.emplace(n, std::move(out)).first->second;
}

namespace {

std::string rooted_code(const Graph& t, int v, int parent) {
    std::vector<std::string> child;
    for (int w : t.sorted_neighbors(v))
        if (w != parent) child.push_back(rooted_code(t, w, v));
    std::sort(child.begin(), child.end());
    std::string s = "(";
    for (const auto& c : child) s += c;
    s += ")";
    return s;
}

std::vector<int> tree_centers(const Graph& t) {
    const int n = t.n();
    if (n == 1) return {1};
    std::vector<int> deg(n + 1), layer;
    std::vector<char> removed(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int w : t.sorted_neighbors(v))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

} // namespace

std::string tree_code(const Graph& t) {
    auto centers = tree_centers(t);
    if (centers.size() == 1) return rooted_code(t, centers[0], 0);
    std::string a = rooted_code(t, centers[0], centers[1]);
    std::string b = rooted_code(t, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

const std::vector<Graph>& all_trees(int n) {
    static std::map<int, std::vector<Graph>> cache;
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    if (n > 10) throw GuardError("tree class enumeration limited to n <= 10");
    std::vector<Graph> out;
    if (n <= 1) {
        out.push_back(Graph(std::max(n, 0), {}));
    } else {
        std::unordered_set<std::string> seen;
        for (const auto& t : all_trees(n - 1))
            for (int v = 1; v < n; ++v) {
                EdgeList e = t.edges();
                e.emplace_back(v, n);
                Graph bigger(n, std::move(e));
                if (seen.insert(tree_code(bigger)).second) out.push_back(std::move(bigger));
            }
    }
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Graph> all_labeled_connected_graphs(int n) {
    if (n > 5) throw GuardError("labeled graph enumeration limited to n <= 5");
    std::vector<Graph> out;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
        Graph g = mask_to_graph(n, mask);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

Graph random_tree(Rng& rng, int n) {
    if (n <= 2) return path_graph(n);
    // Uniform labeled tree from a random Pruefer sequence.
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = rng.uniform(1, n);
    std::vector<int> deg(n + 1, 1);
    for (int x : pruefer) ++deg[x];
    EdgeList edges;
    std::vector<char> used(n + 1, 0);
    for (int x : pruefer) {
        for (int leaf = 1; leaf <= n; ++leaf)
            if (deg[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
                used[leaf] = 1;
                --deg[x];
                break;
            }
    }
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (!used[v]) rest.push_back(v);
    edges.emplace_back(rest[0], rest[1]);
    return Graph(n, std::move(edges));
}

Graph random_caterpillar(Rng& rng, int n) {
    if (n <= 3) return path_graph(n);
    int l = rng.uniform(2, n);
    EdgeList edges;
    for (int v = 1; v < l; ++v) edges.emplace_back(v, v + 1);
    for (int v = l + 1; v <= n; ++v) edges.emplace_back(rng.uniform(1, l), v);
    return Graph(n, std::move(edges));
}

Labeling random_labeling(Rng& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
    return Labeling(std::move(perm));
}

Graph fig1_graph() {
    EdgeList e;
    const int center = 16;
    const int spokes[] = {3, 6, 9, 12, 15};
    for (int s : spokes) e.emplace_back(s, center);
    for (int k = 0; k < 5; ++k) {
        e.emplace_back(3 * k + 1, spokes[k]);
        e.emplace_back(3 * k + 2, spokes[k]);
    }
    return Graph(16, std::move(e));
}

Graph fig2_graph() {
    return Graph(13, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                      {2, 8}, {2, 9}, {4, 10}, {5, 11}, {6, 12}, {6, 13}});
}

Graph fig3_graph() {
    return Graph(12, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                      {3, 8}, {3, 9}, {3, 10}, {4, 11}, {6, 12}});
}

Graph fig4_graph() {
    EdgeList e = fig3_graph().edges();
    // Second caterpillar on 13..23: path 13..18, leaves 19,20 on 14,
    // 21,22 on 15, 23 on 16; bridged 3 - 15.
    for (auto [u, v] : EdgeList{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                {2, 7}, {2, 8}, {3, 9}, {3, 10}, {4, 11}})
        e.emplace_back(u + 12, v + 12);
    e.emplace_back(3, 15);
    return Graph(23, std::move(e));
}

Graph ex25_graph() {
    return Graph(5, {{1, 4}, {3, 4}, {3, 5}, {2, 5}});
}

} // namespace binedge
