#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "binedge/admissible.hpp"
#include "binedge/corpus.hpp"

using namespace binedge;

namespace {

// Literal reading of the shortcut condition: for every proper subset of the
// interior, kept in path order, the resulting sequence is not a path. Used
// as the oracle for the chord-based implementation.
bool brute_admissible(const Graph& g, std::vector<int> seq) {
    if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
    const int i = seq.front(), j = seq.back();
    if (i == j) return false;
    std::set<int> distinct(seq.begin(), seq.end());
    if (distinct.size() != seq.size()) return false;
    for (size_t k = 1; k + 1 < seq.size(); ++k)
        if (!(seq[k] < i || seq[k] > j)) return false;
    const int r = static_cast<int>(seq.size()) - 2; // interior count
    for (unsigned mask = 0; mask + 1 < (1u << r); ++mask) {
        std::vector<int> sub{i};
        for (int k = 0; k < r; ++k)
            if (mask & (1u << k)) sub.push_back(seq[k + 1]);
        sub.push_back(j);
        bool path = true;
        for (size_t k = 0; k + 1 < sub.size(); ++k)
            if (!g.has_edge(sub[k], sub[k + 1])) {
                path = false;
                break;
            }
        if (path) return false;
    }
    return true;
}

void all_simple_paths_from(const Graph& g, std::vector<int>& path, std::vector<char>& used,
                           std::vector<std::vector<int>>& out) {
    if (path.size() >= 2) out.push_back(path);
    for (int w : g.sorted_neighbors(path.back())) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        all_simple_paths_from(g, path, used, out);
        path.pop_back();
        used[w] = 0;
    }
}

std::vector<std::vector<int>> all_simple_paths(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> used(g.n() + 1, 0);
    for (int v = 1; v <= g.n(); ++v) {
        std::vector<int> path{v};
        used[v] = 1;
        all_simple_paths_from(g, path, used, out);
        used[v] = 0;
    }
    return out;
}

} // namespace

TEST_CASE("is_admissible on the pinned instances") {
    Graph c4 = cycle_graph(4);
    CHECK(is_admissible(c4, {1, 4, 3}));
    CHECK_FALSE(is_admissible(path_graph(3), {1, 2, 3}));
    CHECK(is_admissible(ex25_graph(), {1, 4, 3, 5, 2}));
    CHECK_THROWS_AS(is_admissible(path_graph(3), {1, 3}), DomainError);
    // Bare edges are admissible, in either orientation.
    CHECK(is_admissible(c4, {1, 2}));
    CHECK(is_admissible(c4, {2, 1}));
    // A chord through the endpoints kills the longer path.
    CHECK_FALSE(is_admissible(complete_graph(3), {2, 1, 3}));
}

TEST_CASE("chord test agrees with the subset-enumeration oracle") {
    Rng rng(17);
    int checked = 0;
    for (int iters = 0; iters < 40; ++iters) {
        int n = rng.uniform(2, 7);
        const auto& classes = all_connected_graphs(n);
        Graph g = classes[rng.uniform(0, static_cast<int>(classes.size()) - 1)];
        for (const auto& p : all_simple_paths(g)) {
            CHECK(is_admissible(g, p) == brute_admissible(g, p));
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("enumerate_admissible") {
    CHECK(enumerate_admissible(path_graph(3), 1, 3).empty());

    auto c4_paths = enumerate_admissible(cycle_graph(4), 2, 4);
    REQUIRE(c4_paths.size() == 1);
    CHECK(c4_paths[0].vertices == std::vector<int>{2, 1, 4});

    Graph star = star_graph(4, 2);
    auto star_paths = enumerate_admissible(star, 3, 4);
    REQUIRE(star_paths.size() == 1);
    CHECK(star_paths[0].vertices == std::vector<int>{3, 2, 4});

    CHECK_THROWS_AS(enumerate_admissible(star, 4, 3), DomainError);

    // Lexicographic output order and independence of the adjacency order.
    Graph g1(5, {{1, 2}, {2, 3}, {1, 4}, {4, 3}, {1, 3}, {2, 5}, {5, 3}});
    Graph g2(5, g1.edges(), {{1, {4, 3, 2}}, {3, {5, 4, 2, 1}}});
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            auto a = enumerate_admissible(g1, i, j);
            auto b = enumerate_admissible(g2, i, j);
            CHECK(a == b);
            CHECK(std::is_sorted(a.begin(), a.end()));
        }

    // The vertex cap truncates deep paths.
    auto capped = enumerate_admissible(ex25_graph(), 1, 2, 3);
    CHECK(capped.empty());
    auto full = enumerate_admissible(ex25_graph(), 1, 2);
    REQUIRE(full.size() == 1);
    CHECK(full[0].vertices.size() == 5);
}

TEST_CASE("groebner basis contents") {
    auto p3 = groebner_basis(path_graph(3));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].degree() == 2);
    CHECK(p3[1].degree() == 2);

    auto ex = groebner_basis(ex25_graph());
    auto stats = basis_stats(ex);
    CHECK(stats.max_degree == 5);
    CHECK(stats.degree_histogram.count(4) == 0);
    CHECK(stats.degree_histogram.at(5) == 1);

    CHECK(groebner_basis(Graph(4, {})).empty());

    // Four edges plus one degree-3 element per diagonal pair.
    auto c4 = groebner_basis(cycle_graph(4));
    auto c4stats = basis_stats(c4);
    CHECK(c4stats.size == 6);
    CHECK(c4stats.max_degree == 3);
    CHECK(c4stats.degree_histogram.at(2) == 4);
    CHECK(c4stats.degree_histogram.at(3) == 2);
}

TEST_CASE("every edge appears exactly once as a bare binomial") {
    Rng rng(23);
    for (int iters = 0; iters < 20; ++iters) {
        int n = rng.uniform(2, 6);
        const auto& classes = all_connected_graphs(n);
        Graph g = classes[rng.uniform(0, static_cast<int>(classes.size()) - 1)];
        auto basis = groebner_basis(g);
        for (auto [u, v] : g.edges()) {
            int bare = 0;
            for (const auto& el : basis)
                if (el.edge == Edge{u, v} && el.degree() == 2) ++bare;
            CHECK(bare == 1);
        }
        for (const auto& el : basis)
            CHECK(el.degree() == static_cast<int>(el.path.vertices.size()));
    }
}

TEST_CASE("basis stats on small graphs") {
    CHECK(basis_stats(groebner_basis(cycle_graph(4))).max_degree == 3);
    auto p3 = basis_stats(groebner_basis(path_graph(3)));
    CHECK(p3.size == 2);
    CHECK(p3.max_degree == 2);
    CHECK(basis_stats(groebner_basis(star_graph(4, 2))).size == 4);
    CHECK(basis_stats({}).max_degree == 0);
    CHECK(max_admissible_degree(cycle_graph(4)) == 3);
}

TEST_CASE("element text and support split") {
    auto ex = groebner_basis(ex25_graph());
    const GroebnerElement* deg5 = nullptr;
    for (const auto& el : ex)
        if (el.degree() == 5) deg5 = &el;
    REQUIRE(deg5 != nullptr);
    CHECK(deg5->to_text() == "x3*x4*x5*(x1*y2 - x2*y1)");
    CHECK(deg5->edge == Edge{1, 2});
    CHECK(deg5->x_support == std::vector<int>{3, 4, 5});
    CHECK(deg5->y_support.empty());

    Graph star = star_graph(4, 2);
    auto sb = groebner_basis(star);
    for (const auto& el : sb)
        if (el.degree() == 3) CHECK(el.to_text() == "y2*(x3*y4 - x4*y3)");
}
