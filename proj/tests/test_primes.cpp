#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "binedge/corpus.hpp"
#include "binedge/primes.hpp"

using namespace binedge;

namespace {

std::set<std::vector<int>> cut_sets(const std::vector<PrimeComponent>& pcs) {
    std::set<std::vector<int>> out;
    for (const auto& pc : pcs) out.insert(pc.s);
    return out;
}

// Dimension by maximizing over every subset, with no minimality shortcut.
int brute_dimension(const Graph& g) {
    int best = 0;
    const int n = g.n();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> s;
        for (int v = 1; v <= n; ++v)
            if (mask & (1ul << (v - 1))) s.push_back(v);
        auto pc = prime_component(g, s);
        best = std::max(best, pc.dim_contribution);
    }
    return best;
}

} // namespace

TEST_CASE("prime_component") {
    auto empty = prime_component(path_graph(3), {});
    CHECK(empty.components == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(empty.dim_contribution == 4);

    auto middle = prime_component(path_graph(3), {2});
    CHECK(middle.components == std::vector<std::vector<int>>{{1}, {3}});
    CHECK(middle.dim_contribution == 4);

    auto diag = prime_component(cycle_graph(4), {1, 3});
    CHECK(diag.components == std::vector<std::vector<int>>{{2}, {4}});
    CHECK(diag.dim_contribution == 4);

    CHECK_THROWS_AS(prime_component(path_graph(3), {5}), DomainError);
}

TEST_CASE("is_minimal_prime") {
    CHECK(is_minimal_prime(path_graph(3), {2}));
    CHECK_FALSE(is_minimal_prime(path_graph(3), {1}));
    CHECK(is_minimal_prime(path_graph(3), {}));
    CHECK_THROWS_AS(is_minimal_prime(Graph(4, {{1, 2}}), {1}), DomainError);
}

TEST_CASE("minimal_primes enumeration") {
    auto p3 = minimal_primes(path_graph(3));
    CHECK(cut_sets(p3) == std::set<std::vector<int>>{{}, {2}});

    for (int n = 2; n <= 6; ++n) {
        auto kn = minimal_primes(complete_graph(n));
        CHECK(kn.size() == 1);
        CHECK(kn[0].s.empty());
    }
    CHECK_THROWS_AS(minimal_primes(path_graph(4), 3), GuardError);

    // Canonical order: by size, then lexicographic.
    auto p6 = minimal_primes(path_graph(6));
    for (size_t k = 1; k < p6.size(); ++k) {
        bool ordered = p6[k - 1].s.size() < p6[k].s.size() ||
                       (p6[k - 1].s.size() == p6[k].s.size() && p6[k - 1].s < p6[k].s);
        CHECK(ordered);
    }
}

TEST_CASE("minimality is sound and complete on small graphs") {
    Rng rng(61);
    for (int iters = 0; iters < 12; ++iters) {
        int n = rng.uniform(2, 6);
        const auto& classes = all_connected_graphs(n);
        Graph g = classes[rng.uniform(0, static_cast<int>(classes.size()) - 1)];
        auto reported = cut_sets(minimal_primes(g));
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            std::vector<int> s;
            for (int v = 1; v <= n; ++v)
                if (mask & (1ul << (v - 1))) s.push_back(v);
            bool minimal = reported.count(s) != 0;
            if (s.empty()) {
                CHECK(minimal);
                continue;
            }
            int c = static_cast<int>(components_without(g, s).size());
            bool strict_drop = true;
            for (size_t k = 0; k < s.size(); ++k) {
                std::vector<int> rest;
                for (size_t t = 0; t < s.size(); ++t)
                    if (t != k) rest.push_back(s[t]);
                if (static_cast<int>(components_without(g, rest).size()) >= c)
                    strict_drop = false;
            }
            CHECK(minimal == strict_drop);
        }
    }
}

TEST_CASE("krull dimension") {
    CHECK(krull_dimension(fig2_graph()).dimension == 19);
    for (int n = 2; n <= 8; ++n) {
        CHECK(krull_dimension(path_graph(n)).dimension == n + 1);
        CHECK(krull_dimension(path_graph(n)).dimension == brute_dimension(path_graph(n)));
    }
    CHECK_THROWS_AS(krull_dimension(Graph(21, {}), 20), GuardError);

    Rng rng(67);
    for (int iters = 0; iters < 15; ++iters) {
        int n = rng.uniform(2, 6);
        const auto& classes = all_connected_graphs(n);
        Graph g = classes[rng.uniform(0, static_cast<int>(classes.size()) - 1)];
        auto res = krull_dimension(g);
        CHECK(res.dimension == brute_dimension(g));
        CHECK(res.dimension >= n + 1);
        CHECK(prime_component(g, res.witness_s).dim_contribution == res.dimension);
    }
}

TEST_CASE("caterpillar characterization matches enumeration") {
    Graph fig2 = fig2_graph();
    CHECK(caterpillar_minimal_primes(fig2) == minimal_primes(fig2));

    Graph p6 = path_graph(6);
    CHECK(caterpillar_minimal_primes(p6) == minimal_primes(p6));
    // Interior subsets of a path enter exactly when pairwise distance >= 2.
    for (const auto& pc : caterpillar_minimal_primes(p6)) {
        for (size_t k = 0; k + 1 < pc.s.size(); ++k) CHECK(pc.s[k + 1] - pc.s[k] >= 2);
        for (int v : pc.s) {
            CHECK(v >= 2);
            CHECK(v <= 5);
        }
    }

    CHECK_THROWS_AS(caterpillar_minimal_primes(fig1_graph()), DomainError);
}

TEST_CASE("adjacent degree-3 spine vertices obstruct minimality in the middle") {
    // Path 1..5 with one leaf on each of 2, 3, 4: all three have degree 3.
    Graph t(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {3, 7}, {4, 8}});
    auto family = cut_sets(caterpillar_minimal_primes(t));
    CHECK(family.count({2, 4}) == 1);
    CHECK(family.count({3}) == 1);
    // v3 sits at distance 1 from both chosen neighbors, so {2,3,4} is out.
    CHECK(family.count({2, 3, 4}) == 0);
    int with = static_cast<int>(components_without(t, {2, 3, 4}).size());
    int without_v3 = static_cast<int>(components_without(t, {2, 4}).size());
    CHECK(with == without_v3);
    CHECK(family == cut_sets(minimal_primes(t)));
}

TEST_CASE("caterpillar characterization on a seeded corpus") {
    Rng rng(71);
    for (int iters = 0; iters < 40; ++iters) {
        Graph c = random_caterpillar(rng, rng.uniform(2, 12));
        CHECK(caterpillar_minimal_primes(c) == minimal_primes(c));
    }
}

TEST_CASE("leaves never enter a minimal cut set") {
    Rng rng(73);
    for (int iters = 0; iters < 20; ++iters) {
        Graph t = random_tree(rng, rng.uniform(2, 9));
        for (const auto& pc : minimal_primes(t))
            for (int v : pc.s) CHECK(t.degree(v) >= 2);
    }
}

TEST_CASE("generator membership certificate") {
    Rng rng(79);
    for (int iters = 0; iters < 15; ++iters) {
        int n = rng.uniform(2, 6);
        const auto& classes = all_connected_graphs(n);
        Graph g = classes[rng.uniform(0, static_cast<int>(classes.size()) - 1)];
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            std::vector<int> s;
            for (int v = 1; v <= n; ++v)
                if (mask & (1ul << (v - 1))) s.push_back(v);
            CHECK(generator_membership(g, prime_component(g, s)));
        }
    }
    // A fabricated split that cuts an edge fails.
    PrimeComponent fake;
    fake.s = {};
    fake.components = {{1}, {2, 3}};
    fake.dim_contribution = 5;
    CHECK_FALSE(generator_membership(path_graph(3), fake));
}

TEST_CASE("caterpillar characterization across all small trees") {
    for (int n = 2; n <= 8; ++n)
        for (const auto& t : all_trees(n))
            if (classify(t).is_caterpillar)
                CHECK(caterpillar_minimal_primes(t) == minimal_primes(t));
}
