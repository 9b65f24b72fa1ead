#include "binedge/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace binedge {

using nlohmann::json;

Graph parse_graph_json(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin, 0, e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
            throw ParseError(origin, 0, "expected an object with \"n\" and \"edges\"");
        if (!doc["n"].is_number_integer())
            throw ParseError(origin, 0, "\"n\" must be an integer");
        int n = doc["n"].get<int>();
        EdgeList edges;
        if (!doc["edges"].is_array())
            throw ParseError(origin, 0, "\"edges\" must be an array of pairs");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError(origin, 0, "each edge must be a pair of integers");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        AdjacencyOrder order;
        if (doc.contains("adjacency_order")) {
            if (!doc["adjacency_order"].is_object())
                throw ParseError(origin, 0, "\"adjacency_order\" must map vertices to neighbor lists");
            for (auto& [key, val] : doc["adjacency_order"].items()) {
                if (!val.is_array())
                    throw ParseError(origin, 0, "adjacency_order entries must be arrays");
                std::vector<int> seq;
                for (const auto& x : val) {
                    if (!x.is_number_integer())
                        throw ParseError(origin, 0, "adjacency_order entries must hold integers");
                    seq.push_back(x.get<int>());
                }
                order[std::stoi(key)] = std::move(seq);
            }
        }
        return Graph(n, std::move(edges), order);
    } catch (const DomainError& e) {
        throw ParseError(origin, 0, e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError(origin, 0, "adjacency_order keys must be integer vertex ids");
    } catch (const std::out_of_range&) {
        throw ParseError(origin, 0, "adjacency_order keys must be integer vertex ids");
    }
}

Graph parse_graph_edges(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue; // blank
            if (line[pos] == '#') continue;         // comment
            return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError(origin, lineno, "missing header line \"n m\"");
    int n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError(origin, lineno, "header must be \"n m\"");
    }
    EdgeList edges;
    for (int k = 0; k < m; ++k) {
        if (!next_line())
            throw ParseError(origin, lineno, "expected " + std::to_string(m) + " edges, got " +
                                                 std::to_string(k));
        std::istringstream es(line);
        int u = 0, v = 0;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw ParseError(origin, lineno, "edge line must be \"u v\"");
        edges.emplace_back(u, v);
    }
    if (next_line()) throw ParseError(origin, lineno, "unexpected trailing content");
    try {
        return Graph(n, std::move(edges));
    } catch (const DomainError& e) {
        throw ParseError(origin, 0, e.what());
    }
}

Graph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream f(path);
    if (!f) throw ParseError(path, 0, "cannot open file");
    std::ostringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    if (format == GraphFormat::auto_detect) {
        auto pos = text.find_first_not_of(" \t\r\n");
        format = (pos != std::string::npos && (text[pos] == '{' || text[pos] == '['))
                     ? GraphFormat::json
                     : GraphFormat::edges;
    }
    return format == GraphFormat::json ? parse_graph_json(text, path)
                                       : parse_graph_edges(text, path);
}

std::string graph_to_json(const Graph& g, bool pretty) {
    json doc;
    doc["n"] = g.n();
    auto edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    doc["edges"] = std::move(edges);
    // Only non-default orders are worth writing out.
    json order = json::object();
    for (int v = 1; v <= g.n(); ++v)
        if (g.neighbors(v) != g.sorted_neighbors(v)) order[std::to_string(v)] = g.neighbors(v);
    if (!order.empty()) doc["adjacency_order"] = std::move(order);
    return pretty ? doc.dump(2) : doc.dump();
}

Labeling parse_labeling(const std::string& text, int n) {
    std::vector<int> labels;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            labels.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("<labeling>", 0, "not an integer: \"" + tok + "\"");
        }
    }
    if (static_cast<int>(labels.size()) != n)
        throw ParseError("<labeling>", 0,
                         "expected " + std::to_string(n) + " labels, got " +
                             std::to_string(labels.size()));
    try {
        return Labeling(std::move(labels));
    } catch (const DomainError& e) {
        throw ParseError("<labeling>", 0, e.what());
    }
}

} // namespace binedge
