#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binedge/betti.hpp"
#include "binedge/closedness.hpp"
#include "binedge/caterpillar.hpp"
#include "binedge/corpus.hpp"

using namespace binedge;

TEST_CASE("beta13 by triple counting") {
    CHECK(beta13_edge_ideal(star_as_graph(star_transform(path_graph(3)))).beta13 == 0);
    CHECK(beta13_edge_ideal(star_as_graph(star_transform(star_graph(4, 2)))).beta13 == 1);
    auto k3 = beta13_edge_ideal(star_as_graph(star_transform(complete_graph(3))));
    CHECK(k3.beta13 == 2);
    // A triangle itself contributes rank 2.
    auto tri = beta13_edge_ideal(complete_graph(3));
    CHECK(tri.beta13 == 2);
    REQUIRE(tri.contributing_triples.size() == 1);
    CHECK(tri.contributing_triples[0].rank == 2);
}

TEST_CASE("certificate is internally consistent") {
    Rng rng(83);
    for (int iters = 0; iters < 20; ++iters) {
        Graph t = random_tree(rng, rng.uniform(2, 9));
        auto cert = beta13_edge_ideal(star_as_graph(star_transform(t)));
        int total = 0;
        for (const auto& tr : cert.contributing_triples) {
            CHECK((tr.rank == 1 || tr.rank == 2));
            total += tr.rank;
        }
        CHECK(total == cert.beta13);
    }
}

TEST_CASE("bipartite transforms of forests count adjacent edge pairs") {
    Rng rng(89);
    for (int iters = 0; iters < 20; ++iters) {
        Graph t = random_tree(rng, rng.uniform(2, 10));
        Graph h = star_as_graph(star_transform(t));
        int pairs = 0;
        for (int v = 1; v <= h.n(); ++v) {
            int d = h.degree(v);
            pairs += d * (d - 1) / 2;
        }
        auto cert = beta13_edge_ideal(h);
        CHECK(cert.beta13 == pairs);
        for (const auto& tr : cert.contributing_triples) CHECK(tr.rank == 1);
    }
}

TEST_CASE("tree basis count identity on pinned instances") {
    auto p3 = verify_cor37(path_graph(3));
    CHECK(p3.lhs == 2);
    CHECK(p3.rhs == 2);
    CHECK(p3.equal);

    auto star = verify_cor37(star_graph(4, 2));
    CHECK(star.lhs == 4);
    CHECK(star.beta13 == 1);
    CHECK(star.rhs == 4);
    CHECK(star.equal);
}

TEST_CASE("tree basis count identity rejects bad input") {
    CHECK_THROWS_AS(verify_cor37(cycle_graph(4)), DomainError);
    // The 16-vertex spider has consecutive labels at distance 3.
    CHECK_THROWS_AS(verify_cor37(fig1_graph()), DomainError);
}

TEST_CASE("tree basis count identity on swept caterpillars") {
    Rng rng(97);
    for (int iters = 0; iters < 30; ++iters) {
        Graph c = random_caterpillar(rng, rng.uniform(2, 12));
        Graph labeled = apply_labeling(c, sweep_labeling(c));
        auto res = verify_cor37(labeled);
        CHECK(res.equal);
    }
}

TEST_CASE("general count identity on pinned instances") {
    auto k3 = verify_general_remark(complete_graph(3));
    CHECK(k3.lhs == 3);
    CHECK(k3.beta13 == 2);
    CHECK(k3.triangles == 1);
    CHECK(k3.rhs == 3);
    CHECK(k3.equal);

    auto c4 = verify_general_remark(cycle_graph(4));
    CHECK(c4.lhs == 6);
    CHECK(c4.beta13 == 2);
    CHECK(c4.triangles == 0);
    CHECK(c4.rhs == 6);
    CHECK(c4.equal);
}

TEST_CASE("general count identity rejects labelings above degree 3") {
    CHECK_THROWS_AS(verify_general_remark(cycle_graph(5)), DomainError);
    CHECK_THROWS_AS(verify_general_remark(ex25_graph()), DomainError);
}

TEST_CASE("general count identity on closure witnesses") {
    Rng rng(101);
    for (int iters = 0; iters < 15; ++iters) {
        int n = rng.uniform(2, 6);
        const auto& classes = all_connected_graphs(n);
        Graph g = classes[rng.uniform(0, static_cast<int>(classes.size()) - 1)];
        auto rep = closure_number(g);
        if (rep.m > 3) continue;
        auto res = verify_general_remark(apply_labeling(g, rep.witness));
        CHECK(res.equal);
    }
}
