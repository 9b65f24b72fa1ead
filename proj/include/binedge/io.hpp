#ifndef BINEDGE_IO_HPP
#define BINEDGE_IO_HPP

#include <string>

#include "binedge/graph.hpp"

namespace binedge {

enum class GraphFormat { auto_detect, json, edges };

/// JSON schema: {"n": int, "edges": [[u,v],...],
///               "adjacency_order": {"v": [neighbors...], ...} (optional)}.
Graph parse_graph_json(const std::string& text, const std::string& origin = "<json>");

/// Plain text: first line "n m", then m lines "u v".
Graph parse_graph_edges(const std::string& text, const std::string& origin = "<edges>");

Graph load_graph(const std::string& path, GraphFormat format = GraphFormat::auto_detect);

std::string graph_to_json(const Graph& g, bool pretty = false);

/// Inline permutation "l1,l2,...,ln" where the k-th entry labels vertex k.
Labeling parse_labeling(const std::string& text, int n);

} // namespace binedge

#endif
