#include "binedge/betti.hpp"

#include "binedge/admissible.hpp"
#include "binedge/closedness.hpp"

namespace binedge {

BettiCertificate beta13_edge_ideal(const Graph& h) {
    BettiCertificate cert;
    const int n = h.n();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                int e = (h.has_edge(a, b) ? 1 : 0) + (h.has_edge(a, c) ? 1 : 0) +
                        (h.has_edge(b, c) ? 1 : 0);
                int rank = e == 2 ? 1 : (e == 3 ? 2 : 0);
                if (rank > 0) {
                    cert.beta13 += rank;
                    cert.contributing_triples.push_back({{a, b, c}, rank});
                }
            }
    return cert;
}

Cor37Result verify_cor37(const Graph& t) {
    auto cls = classify(t);
    if (!cls.is_tree)
        throw DomainError(errc::precondition_failed, "basis count identity requires a tree");
    auto dm = distance_matrix(t);
    for (int i = 1; i < t.n(); ++i)
        if (dm[i][i + 1] > 2)
            throw DomainError(errc::precondition_failed,
                              "labels " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                  " are at distance > 2");
    Cor37Result res;
    res.lhs = static_cast<int>(groebner_basis(t).size());
    res.beta13 = beta13_edge_ideal(star_as_graph(star_transform(t))).beta13;
    res.rhs = t.n() - 1 + res.beta13;
    res.equal = res.lhs == res.rhs;
    return res;
}

RemarkResult verify_general_remark(const Graph& g) {
    if (m_of_labeling(g) > 3)
        throw DomainError(errc::precondition_failed,
                          "the given labels admit a basis element of degree > 3");
    RemarkResult res;
    res.lhs = static_cast<int>(groebner_basis(g).size());
    res.beta13 = beta13_edge_ideal(star_as_graph(star_transform(g))).beta13;
    res.triangles = classify(g).triangle_count;
    res.rhs = g.edge_count() + res.beta13 - 2 * res.triangles;
    res.equal = res.lhs == res.rhs;
    return res;
}

} // namespace binedge
