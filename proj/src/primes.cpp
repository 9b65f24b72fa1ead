#include "binedge/primes.hpp"

#include <algorithm>

#include "binedge/caterpillar.hpp"

namespace binedge {

PrimeComponent prime_component(const Graph& g, const std::vector<int>& s) {
    PrimeComponent pc;
    pc.s = s;
    std::sort(pc.s.begin(), pc.s.end());
    pc.s.erase(std::unique(pc.s.begin(), pc.s.end()), pc.s.end());
    for (int v : pc.s) g.check_vertex(v);
    pc.components = components_without(g, pc.s);
    pc.dim_contribution = (g.n() - static_cast<int>(pc.s.size())) +
                          static_cast<int>(pc.components.size());
    return pc;
}

bool is_minimal_prime(const Graph& g, const std::vector<int>& s) {
    if (!is_connected(g))
        throw DomainError(errc::disconnected, "minimality test is defined for connected graphs");
    for (int v : s) g.check_vertex(v);
    if (s.empty()) return true;
    const int c = static_cast<int>(components_without(g, s).size());
    for (size_t k = 0; k < s.size(); ++k) {
        std::vector<int> without;
        for (size_t t = 0; t < s.size(); ++t)
            if (t != k) without.push_back(s[t]);
        if (static_cast<int>(components_without(g, without).size()) >= c) return false;
    }
    return true;
}

namespace {

bool canonical_less(const PrimeComponent& a, const PrimeComponent& b) {
    if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
    return a.s < b.s;
}

} // namespace

std::vector<PrimeComponent> minimal_primes(const Graph& g, int max_n) {
    if (!is_connected(g))
        throw DomainError(errc::disconnected, "minimal cut sets are enumerated for connected graphs");
    if (g.n() > max_n)
        throw GuardError("minimal cut set enumeration limited to n <= " + std::to_string(max_n) +
                         ", got n = " + std::to_string(g.n()));
    const int n = g.n();
    std::vector<PrimeComponent> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> s;
        for (int v = 1; v <= n; ++v)
            if (mask & (1ul << (v - 1))) s.push_back(v);
        if (is_minimal_prime(g, s)) out.push_back(prime_component(g, s));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

KrullResult krull_dimension(const Graph& g, int max_n) {
    if (g.n() > max_n)
        throw GuardError("dimension computation limited to n <= " + std::to_string(max_n) +
                         ", got n = " + std::to_string(g.n()));
    KrullResult best;
    if (is_connected(g)) {
        for (const auto& pc : minimal_primes(g, max_n))
            if (pc.dim_contribution > best.dimension) {
                best.dimension = pc.dim_contribution;
                best.witness_s = pc.s;
            }
        return best;
    }
    // Disconnected graphs fall back to the full maximum.
    const int n = g.n();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> s;
        for (int v = 1; v <= n; ++v)
            if (mask & (1ul << (v - 1))) s.push_back(v);
        auto pc = prime_component(g, s);
        if (pc.dim_contribution > best.dimension) {
            best.dimension = pc.dim_contribution;
            best.witness_s = pc.s;
        }
    }
    return best;
}

std::vector<PrimeComponent> caterpillar_minimal_primes(const Graph& t) {
    auto d = decompose(t);
    const auto& path = d.central_path;
    const int l = static_cast<int>(path.size());
    std::vector<PrimeComponent> out;
    out.push_back(prime_component(t, {}));
    const int interior = std::max(0, l - 2);
    for (unsigned long mask = 1; mask < (1ul << interior); ++mask) {
        std::vector<int> pos; // 1-based path positions, interior only
        for (int k = 0; k < interior; ++k)
            if (mask & (1ul << k)) pos.push_back(k + 2);
        bool ok = true;
        for (size_t a = 0; a < pos.size() && ok; ++a) {
            // A missing neighbor on either side counts as distance infinity.
            int dprev = a > 0 ? pos[a] - pos[a - 1] : kInfDistance;
            int dnext = a + 1 < pos.size() ? pos[a + 1] - pos[a] : kInfDistance;
            int deg = t.degree(path[pos[a] - 1]);
            if (deg == 2)
                ok = dprev >= 2 && dnext >= 2;
            else if (deg == 3)
                ok = dprev >= 2 || dnext >= 2;
        }
        if (!ok) continue;
        std::vector<int> s;
        for (int p : pos) s.push_back(path[p - 1]);
        out.push_back(prime_component(t, s));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool generator_membership(const Graph& g, const PrimeComponent& pc) {
    std::vector<int> comp_of(g.n() + 1, 0);
    for (size_t c = 0; c < pc.components.size(); ++c)
        for (int v : pc.components[c]) comp_of[v] = static_cast<int>(c) + 1;
    std::vector<char> in_s(g.n() + 1, 0);
    for (int v : pc.s) in_s[v] = 1;
    for (auto [u, v] : g.edges()) {
        if (in_s[u] || in_s[v]) continue;
        if (comp_of[u] == 0 || comp_of[u] != comp_of[v]) return false;
    }
    return true;
}

} // namespace binedge
