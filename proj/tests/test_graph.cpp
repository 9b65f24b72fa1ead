#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "binedge/corpus.hpp"
#include "binedge/graph.hpp"

using namespace binedge;

TEST_CASE("graph construction validates input") {
    Graph p3(3, {{1, 2}, {2, 3}});
    CHECK(p3.n() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(2, 1));

    Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(c4.edge_count() == 4);
    CHECK(classify(c4).is_cycle);

    CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), DomainError);
    try {
        Graph(3, {{1, 1}});
    } catch (const DomainError& e) {
        CHECK(e.code() == errc::loop);
    }
}

TEST_CASE("adjacency order is kept and validated") {
    Graph g(4, {{1, 2}, {2, 3}, {2, 4}}, {{2, {4, 1, 3}}});
    CHECK(g.neighbors(2) == std::vector<int>{4, 1, 3});
    CHECK(g.sorted_neighbors(2) == std::vector<int>{1, 3, 4});
    CHECK_THROWS_AS(Graph(4, {{1, 2}, {2, 3}}, {{2, {1, 1}}}), DomainError);
    CHECK_THROWS_AS(Graph(4, {{1, 2}, {2, 3}}, {{2, {1, 4}}}), DomainError);
}

TEST_CASE("apply_labeling renames and transports order") {
    Graph p3(3, {{1, 2}, {2, 3}});
    CHECK(apply_labeling(p3, Labeling::identity(3)) == p3);

    Graph swapped = apply_labeling(p3, Labeling({1, 3, 2}));
    CHECK(swapped.edges() == EdgeList{{1, 3}, {2, 3}});

    CHECK_THROWS_AS(Labeling({1, 1, 2}), DomainError);
    CHECK_THROWS_AS(apply_labeling(p3, Labeling({1, 2})), DomainError);

    // Antipodal cycle labeling of C4 puts labels 1 and 2 at distance 2.
    Graph c4 = cycle_graph(4);
    Graph relabeled = apply_labeling(c4, Labeling({1, 4, 2, 3}));
    CHECK(distance(relabeled, 1, 2) == 2);
}

TEST_CASE("labeling inverse and reversal") {
    Labeling lab({3, 1, 2});
    CHECK(lab.inverse()(3) == 1);
    CHECK(lab.inverse()(1) == 2);
    CHECK(lab.reversed()(1) == 1);  // 3 -> 3-3+1
    CHECK(lab.reversed().reversed() == lab);
}

TEST_CASE("distance basics") {
    Graph p3(3, {{1, 2}, {2, 3}});
    CHECK(distance(p3, 1, 3) == 2);
    CHECK(distance(p3, 2, 2) == 0);
    Graph iso(2, {});
    CHECK(distance(iso, 1, 2) == kInfDistance);
    CHECK_THROWS_AS(distance(p3, 0, 1), DomainError);
}

TEST_CASE("distance is symmetric and triangular on connected graphs") {
    Rng rng(7);
    for (int iters = 0; iters < 30; ++iters) {
        Graph t = random_tree(rng, rng.uniform(2, 9));
        auto d = distance_matrix(t);
        for (int u = 1; u <= t.n(); ++u)
            for (int v = 1; v <= t.n(); ++v) {
                CHECK(d[u][v] == d[v][u]);
                for (int w = 1; w <= t.n(); ++w) CHECK(d[u][v] <= d[u][w] + d[w][v]);
            }
    }
}

TEST_CASE("components_without") {
    Graph p3(3, {{1, 2}, {2, 3}});
    CHECK(components_without(p3, {2}) == std::vector<std::vector<int>>{{1}, {3}});
    CHECK(components_without(p3, {}) == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(components_without(cycle_graph(4), {1, 3}) ==
          std::vector<std::vector<int>>{{2}, {4}});

    // Sizes partition the complement.
    Rng rng(11);
    for (int iters = 0; iters < 25; ++iters) {
        Graph t = random_tree(rng, rng.uniform(1, 10));
        std::vector<int> s;
        for (int v = 1; v <= t.n(); ++v)
            if (rng.uniform(0, 1)) s.push_back(v);
        int total = 0;
        for (const auto& comp : components_without(t, s)) total += static_cast<int>(comp.size());
        CHECK(total == t.n() - static_cast<int>(s.size()));
    }
}

TEST_CASE("classify recognizes the bundled instances") {
    auto fig2 = classify(fig2_graph());
    CHECK(fig2.is_tree);
    CHECK(fig2.is_caterpillar);
    auto fig1 = classify(fig1_graph());
    CHECK(fig1.is_tree);
    CHECK_FALSE(fig1.is_caterpillar);
    CHECK(classify(complete_graph(3)).triangle_count == 1);
    CHECK(classify(complete_graph(4)).triangle_count == 4);
    CHECK(classify(path_graph(5)).is_path);
    CHECK_FALSE(classify(cycle_graph(5)).is_tree);
    CHECK(classify(cycle_graph(5)).is_cycle);
    CHECK(classify(star_graph(4, 2)).is_caterpillar);
}

TEST_CASE("trees have only bridges") {
    Rng rng(3);
    for (int iters = 0; iters < 20; ++iters) {
        Graph t = random_tree(rng, rng.uniform(2, 10));
        CHECK(classify(t).bridges == t.edges());
    }
    CHECK(classify(cycle_graph(5)).bridges.empty());
}

TEST_CASE("square") {
    CHECK(square(path_graph(3)) == complete_graph(3));
    CHECK(square(cycle_graph(4)) == complete_graph(4));
    CHECK(square(star_graph(4, 2)) == complete_graph(4));
    for (int n = 2; n <= 9; ++n)
        CHECK(square(path_graph(n)).edge_count() == 2 * n - 3);
    // The square contains the graph.
    Rng rng(5);
    for (int iters = 0; iters < 20; ++iters) {
        Graph t = random_tree(rng, rng.uniform(2, 9));
        Graph sq = square(t);
        for (auto [u, v] : t.edges()) CHECK(sq.has_edge(u, v));
    }
}

TEST_CASE("star transform and back") {
    Graph p3(3, {{1, 2}, {2, 3}});
    CHECK(star_transform(p3).star_edges == EdgeList{{1, 2}, {2, 3}});
    CHECK(star_transform(complete_graph(3)).star_edges == EdgeList{{1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(BipartiteStar(3, {{2, 2}}), DomainError);
    CHECK_THROWS_AS(BipartiteStar(3, {{3, 1}}), DomainError);

    Rng rng(13);
    for (int iters = 0; iters < 30; ++iters) {
        Graph t = random_tree(rng, rng.uniform(1, 10));
        CHECK(unstar(star_transform(t)) == t);
    }
    // And the reverse direction on a hand-made bipartite instance.
    BipartiteStar h(4, {{1, 3}, {2, 3}, {2, 4}});
    CHECK(star_transform(unstar(h)) == h);

    Graph as_graph = star_as_graph(star_transform(p3));
    CHECK(as_graph.n() == 6);
    CHECK(as_graph.has_edge(1, 5)); // x1 ~ y2
    CHECK(as_graph.has_edge(2, 6)); // x2 ~ y3
}

TEST_CASE("longest induced path") {
    for (int n = 2; n <= 8; ++n) CHECK(longest_induced_path_length(path_graph(n)) == n - 1);
    CHECK(longest_induced_path_length(fig1_graph()) == 4);
    CHECK(longest_induced_path_length(cycle_graph(5)) == 3);
    CHECK(longest_induced_path_length(cycle_graph(6)) == 4);
    CHECK(longest_induced_path_length(complete_graph(4)) == 1);
    CHECK_THROWS_AS(longest_induced_path_length(cycle_graph(9), 8), GuardError);
}

TEST_CASE("tree diameter path convention") {
    CHECK(tree_diameter_path(star_graph(4, 2)) == std::vector<int>{1, 2, 3});
    CHECK(tree_diameter_path(fig2_graph()) == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(tree_diameter_path(fig3_graph()) == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(tree_diameter_path(path_graph(1)) == std::vector<int>{1});
    CHECK_THROWS_AS(tree_diameter_path(cycle_graph(4)), DomainError);
}

TEST_CASE("corpus generators match known class counts") {
    CHECK(all_connected_graphs(1).size() == 1);
    CHECK(all_connected_graphs(2).size() == 1);
    CHECK(all_connected_graphs(3).size() == 2);
    CHECK(all_connected_graphs(4).size() == 6);
    CHECK(all_connected_graphs(5).size() == 21);
    CHECK(all_connected_graphs(6).size() == 112);
    CHECK(all_graphs(5).size() == 34);
    CHECK(all_trees(7).size() == 11);
    CHECK(all_trees(9).size() == 47);
    CHECK(all_labeled_connected_graphs(4).size() == 38);

    // Representatives are pairwise non-isomorphic.
    std::set<std::uint64_t> codes;
    for (const auto& g : all_connected_graphs(5)) codes.insert(canonical_code(g));
    CHECK(codes.size() == 21);
}

TEST_CASE("random caterpillars are caterpillars") {
    Rng rng(42);
    for (int iters = 0; iters < 50; ++iters) {
        Graph c = random_caterpillar(rng, rng.uniform(2, 14));
        CHECK(classify(c).is_caterpillar);
    }
}

TEST_CASE("bundled instances have the documented shapes") {
    CHECK(fig1_graph().n() == 16);
    CHECK(fig1_graph().edge_count() == 15);
    CHECK(fig2_graph().n() == 13);
    CHECK(fig3_graph().n() == 12);
    CHECK(fig4_graph().n() == 23);
    CHECK(fig4_graph().edge_count() == 22);
    CHECK(classify(fig4_graph()).is_tree);
    CHECK(ex25_graph().edges() == EdgeList{{1, 4}, {2, 5}, {3, 4}, {3, 5}});
    // ex25 is a path graph in disguise: 1-4-3-5-2.
    CHECK(classify(ex25_graph()).is_path);
}

TEST_CASE("seeded corpora are replayable") {
    Rng a(42), b(42);
    for (int k = 0; k < 100; ++k) CHECK(a.uniform(1, 1000) == b.uniform(1, 1000));
    Rng c(42), d(43);
    Graph g1 = random_caterpillar(c, 10);
    Graph g2 = random_caterpillar(d, 10);
    Rng e(42);
    CHECK(g1 == random_caterpillar(e, 10));
    CHECK((g1 == g2) == false);
}
