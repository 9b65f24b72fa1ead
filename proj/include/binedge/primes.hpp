#ifndef BINEDGE_PRIMES_HPP
#define BINEDGE_PRIMES_HPP

#include <vector>

#include "binedge/graph.hpp"

namespace binedge {

/// Cut set S with the connected components of the complement; its ideal
/// contributes (n - |S|) + c(S) to the dimension.
struct PrimeComponent {
    std::vector<int> s;                       // sorted ascending
    std::vector<std::vector<int>> components; // canonical component order
    int dim_contribution = 0;
    bool operator==(const PrimeComponent& o) const {
        return s == o.s && components == o.components;
    }
};

PrimeComponent prime_component(const Graph& g, const std::vector<int>& s);

/// Minimality test for connected g: S is empty, or removing any single
/// member strictly drops the component count.
bool is_minimal_prime(const Graph& g, const std::vector<int>& s);

/// All minimal cut sets by exhaustive subset enumeration, ordered by
/// (|S|, S lexicographic). Cost 2^n * poly.
std::vector<PrimeComponent> minimal_primes(const Graph& g, int max_n = 20);

struct KrullResult {
    int dimension = 0;
    std::vector<int> witness_s;
};

/// max over S of (n - |S|) + c(S); for connected graphs the maximum over
/// minimal cut sets suffices and is used.
KrullResult krull_dimension(const Graph& g, int max_n = 20);

/// The caterpillar characterization: S = {} plus the interior central-path
/// subsets where each degree-2 member keeps both its neighbors in S (when
/// they exist) at path distance >= 2, each degree-3 member keeps at least
/// one side at distance >= 2, and members of degree >= 4 are free.
std::vector<PrimeComponent> caterpillar_minimal_primes(const Graph& t);

/// Combinatorial certificate that every edge binomial lies in the component
/// ideal: each edge has an endpoint in S or lives inside one component.
bool generator_membership(const Graph& g, const PrimeComponent& pc);

} // namespace binedge

#endif
