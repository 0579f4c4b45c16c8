#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "berge/types.hpp"

namespace berge {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

// Text formats.
//   graph:      header "n=<int>", then one "u v" pair per line
//   hypergraph: header "n=<int> [r=<int>]", then one edge per line as
//               ascending vertex indices ("-" is the empty set)
//   coloring:   header "k=<int>", then "<edge-line> : <color>" per edge;
//               the host is the listed edge set, n = 1 + max vertex
Graph parse_graph(const std::string& text);
Hypergraph parse_hypergraph(const std::string& text);
std::pair<Hypergraph, EdgeColoring> parse_coloring(const std::string& text);

std::string serialize(const Graph& g);
std::string serialize(const Hypergraph& h);
std::string serialize(const Hypergraph& host, const EdgeColoring& c);

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Hypergraph& h);
nlohmann::json to_json(const Hypergraph& host, const EdgeColoring& c);

Graph graph_from_json(const nlohmann::json& j);
Hypergraph hypergraph_from_json(const nlohmann::json& j);
std::pair<Hypergraph, EdgeColoring> coloring_from_json(const nlohmann::json& j);

} // namespace berge
