#include "binedge/caterpillar.hpp"

#include <algorithm>

namespace binedge {

CaterpillarDecomposition decompose(const Graph& t) {
    auto cls = classify(t);
    if (!cls.is_caterpillar)
        throw DomainError(errc::not_caterpillar, "decomposition requires a caterpillar tree");
    CaterpillarDecomposition d;
    d.central_path = tree_diameter_path(t);
    std::vector<char> on_path(t.n() + 1, 0);
    for (int v : d.central_path) on_path[v] = 1;
    for (int v : d.central_path) {
        std::vector<int> leaves;
        for (int w : t.neighbors(v))
            if (!on_path[w]) leaves.push_back(w);
        d.leaf_neighbors[v] = std::move(leaves);
    }
    for (int v = 1; v <= t.n(); ++v)
        if (!on_path[v] && t.degree(v) != 1)
            throw DomainError(errc::not_caterpillar,
                              "vertex " + std::to_string(v) + " is off the central path");
    return d;
}

namespace {

struct LabelSink {
    std::map<int, int> labels;
    int next = 1;
    void assign(int v) { labels[v] = next++; }
    bool labeled(int v) const { return labels.count(v) != 0; }
};

// Rightmost-first: walk the stored leaf order backward, skipping leaves that
// already carry a label (the leaf_start seed).
void label_leaves(LabelSink& sink, const CaterpillarDecomposition& d, int support) {
    auto it = d.leaf_neighbors.find(support);
    if (it == d.leaf_neighbors.end()) return;
    const auto& seq = it->second;
    for (auto r = seq.rbegin(); r != seq.rend(); ++r)
        if (!sink.labeled(*r)) sink.assign(*r);
}

std::map<int, int> sweep_on(const CaterpillarDecomposition& d) {
    LabelSink sink;
    const auto& p = d.central_path;
    sink.assign(p[0]);
    for (size_t j = 1; j < p.size(); ++j) {
        sink.assign(p[j]);
        label_leaves(sink, d, p[j]);
    }
    return sink.labels;
}

// The skip-by-two body for 1 < i0 < l; the start vertex (and, for a leaf
// start, the seed leaf) is already labeled in the sink.
void alg1_body(LabelSink& sink, const CaterpillarDecomposition& d, int i0) {
    const auto& p = d.central_path;
    const int l = static_cast<int>(p.size());
    auto vtx = [&](int idx) { return p[idx - 1]; }; // 1-based path positions
    int j = i0;
    while (j < l - 1) {
        label_leaves(sink, d, vtx(j + 1));
        sink.assign(vtx(j + 2));
        j += 2;
    }
    if (j == l - 1) {
        sink.assign(vtx(l));
        j = l;
    } else {
        sink.assign(vtx(l - 1));
        j = l - 1;
    }
    while (j > 2) {
        label_leaves(sink, d, vtx(j - 1));
        sink.assign(vtx(j - 2));
        j -= 2;
    }
    if (j == 2 && i0 > 1) {
        sink.assign(vtx(1));
        j = 1;
    } else if (i0 > 2) {
        sink.assign(vtx(2));
        j = 2;
    }
    while (j < i0 - 2) {
        label_leaves(sink, d, vtx(j + 1));
        sink.assign(vtx(j + 2));
        j += 2;
    }
    if (j == i0 - 2) label_leaves(sink, d, vtx(i0 - 1));
}

Labeling to_labeling(const Graph& t, const std::map<int, int>& labels) {
    std::vector<int> vec(t.n(), 0);
    for (auto [v, lab] : labels) vec[v - 1] = lab;
    return Labeling(std::move(vec));
}

CaterpillarDecomposition reversed_path(CaterpillarDecomposition d) {
    std::reverse(d.central_path.begin(), d.central_path.end());
    return d;
}

} // namespace

std::map<int, int> sweep_labels_on(const CaterpillarDecomposition& d) {
    return sweep_on(d);
}

Labeling sweep_labeling(const Graph& t) {
    return to_labeling(t, sweep_on(decompose(t)));
}

Labeling algorithm1_labeling(const Graph& t, int start, Alg1Variant variant) {
    t.check_vertex(start);
    auto d = decompose(t);
    const auto& p = d.central_path;
    const int l = static_cast<int>(p.size());

    if (variant == Alg1Variant::assign_n)
        return labeling_with_one_at(t, start).reversed();

    auto pos_of = [&](int v) {
        auto it = std::find(p.begin(), p.end(), v);
        return it == p.end() ? 0 : static_cast<int>(it - p.begin()) + 1;
    };

    if (variant == Alg1Variant::path_start) {
        int i0 = pos_of(start);
        if (i0 == 0)
            throw DomainError(errc::bad_start,
                              "vertex " + std::to_string(start) + " is not on the central path");
        if (i0 == 1) return to_labeling(t, sweep_on(d));
        if (i0 == l) return to_labeling(t, sweep_on(reversed_path(d)));
        LabelSink sink;
        sink.assign(start);
        alg1_body(sink, d, i0);
        return to_labeling(t, sink.labels);
    }

    // leaf_start: the support vertex of a leaf is always a path interior
    // vertex, since diameter-path endpoints carry no off-path neighbors.
    if (pos_of(start) != 0)
        throw DomainError(errc::bad_start,
                          "vertex " + std::to_string(start) + " lies on the central path");
    int support = t.neighbors(start).front();
    int i0 = pos_of(support);
    if (i0 <= 1 || i0 >= l)
        throw DomainError(errc::bad_start, "leaf support must be a path interior vertex");
    LabelSink sink;
    sink.assign(start);   // 1
    sink.assign(support); // 2
    alg1_body(sink, d, i0);
    return to_labeling(t, sink.labels);
}

Labeling labeling_with_one_at(const Graph& t, int start) {
    auto d = decompose(t);
    bool on_path = std::find(d.central_path.begin(), d.central_path.end(), start) !=
                   d.central_path.end();
    return algorithm1_labeling(t, start,
                               on_path ? Alg1Variant::path_start : Alg1Variant::leaf_start);
}

std::pair<Graph, Labeling> bridge_compose(const Graph& h1, const Labeling& lab1,
                                          const Graph& h2, const Labeling& lab2, Edge e) {
    const int n1 = h1.n(), n2 = h2.n();
    h1.check_vertex(e.first);
    h2.check_vertex(e.second);
    if (lab1(e.first) != 1 || lab2(e.second) != 1)
        throw DomainError(errc::bad_endpoints, "both bridge endpoints must carry label 1");
    EdgeList edges = h1.edges();
    for (auto [u, v] : h2.edges()) edges.emplace_back(u + n1, v + n1);
    edges.emplace_back(e.first, e.second + n1);
    Graph g(n1 + n2, std::move(edges));
    std::vector<int> labels(n1 + n2);
    for (int v = 1; v <= n1; ++v) labels[v - 1] = n1 - lab1(v) + 1;
    for (int v = 1; v <= n2; ++v) labels[n1 + v - 1] = n1 + lab2(v);
    return {std::move(g), Labeling(std::move(labels))};
}

std::pair<Graph, Labeling> compose_T1_B_T2(const Graph& t1, const Graph& b, const Graph& t2,
                                           Edge join1, Edge join2) {
    const int n1 = t1.n(), nb = b.n(), n2 = t2.n();
    const int a1 = join1.first, b1 = join1.second;
    const int b2 = join2.first, a2 = join2.second;
    t1.check_vertex(a1);
    b.check_vertex(b1);
    b.check_vertex(b2);
    t2.check_vertex(a2);

    auto db = decompose(b); // also validates b
    const auto& bp = db.central_path;
    if (bp.size() == 1) {
        if (b1 != bp[0] || b2 != bp[0])
            throw DomainError(errc::bad_join, "join vertices must be the central path endpoints of b");
    } else if (b1 == bp.front() && b2 == bp.back()) {
        // oriented as stored
    } else if (b1 == bp.back() && b2 == bp.front()) {
        db = CaterpillarDecomposition{{bp.rbegin(), bp.rend()}, db.leaf_neighbors};
    } else {
        throw DomainError(errc::bad_join, "join vertices must be the central path endpoints of b");
    }

    // t1 keeps its ids, b shifts by n1, t2 by n1 + nb.
    EdgeList edges = t1.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + n1, v + n1);
    for (auto [u, v] : t2.edges()) edges.emplace_back(u + n1 + nb, v + n1 + nb);
    edges.emplace_back(a1, b1 + n1);
    edges.emplace_back(b2 + n1, a2 + n1 + nb);
    Graph g(n1 + nb + n2, std::move(edges));

    // t1 gets 1..n1 with the junction at n1.
    Labeling l1 = algorithm1_labeling(t1, a1, Alg1Variant::assign_n);
    // The bridge block a1 - b ... b - a2 is swept as one caterpillar; its
    // endpoints carry no leaves, so b's own leaf map carries over.
    CaterpillarDecomposition dbridge;
    dbridge.central_path.push_back(a1);
    for (int v : db.central_path) dbridge.central_path.push_back(v + n1);
    dbridge.central_path.push_back(a2 + n1 + nb);
    for (auto& [v, leaves] : db.leaf_neighbors) {
        std::vector<int> shifted;
        for (int w : leaves) shifted.push_back(w + n1);
        dbridge.leaf_neighbors[v + n1] = std::move(shifted);
    }
    auto bridge_labels = sweep_labels_on(dbridge);
    // t2 gets its junction at the top of the bridge range.
    Labeling l2 = labeling_with_one_at(t2, a2);

    std::vector<int> labels(g.n());
    for (int v = 1; v <= n1; ++v) labels[v - 1] = l1(v);
    for (auto [v, lab] : bridge_labels) labels[v - 1] = n1 - 1 + lab;
    for (int v = 1; v <= n2; ++v) labels[n1 + nb + v - 1] = n1 + nb + l2(v);
    return {std::move(g), Labeling(std::move(labels))};
}

} // namespace binedge
