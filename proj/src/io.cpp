#include "berge/io.hpp"

#include <algorithm>
#include <sstream>

namespace berge {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

// "n=4", "r=3", "k=2" style header fields
int header_field(const std::string& tok, const char* key, int line) {
    std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError(line, "expected '" + prefix + "<int>', got '" + tok + "'");
    return parse_int(tok.substr(prefix.size()), line, key);
}

struct Lines {
    std::vector<std::pair<int, std::string>> rows; // (line number, content)
};

Lines nonblank_lines(const std::string& text) {
    Lines out;
    std::istringstream in(text);
    std::string row;
    int ln = 0;
    while (std::getline(in, row)) {
        ++ln;
        if (row.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!row.empty() && row.back() == '\r') row.pop_back();
        out.rows.emplace_back(ln, row);
    }
    if (out.rows.empty()) throw ParseError(1, "empty input");
    return out;
}

Mask parse_edge_tokens(const std::vector<std::string>& toks, std::size_t count,
                       int n, int line) {
    if (count == 1 && toks[0] == "-") return 0;
    Mask m = 0;
    int prev = -1;
    for (std::size_t i = 0; i < count; ++i) {
        int v = parse_int(toks[i], line, "vertex index");
        if (v < 0 || v >= n)
            throw ParseError(line, "vertex index " + std::to_string(v) +
                                       " out of range for n=" + std::to_string(n));
        if (v == prev)
            throw ParseError(line, "repeated vertex in edge");
        if (v < prev)
            throw ParseError(line, "vertices must be ascending");
        prev = v;
        m |= vbit(v);
    }
    return m;
}

void append_edge_line(std::string& out, Mask e) {
    if (e == 0) {
        out += "-";
        return;
    }
    bool first = true;
    for (int v : mask_vertices(e)) {
        if (!first) out += ' ';
        out += std::to_string(v);
        first = false;
    }
}

} // namespace

Graph parse_graph(const std::string& text) {
    Lines ls = nonblank_lines(text);
    auto [hln, header] = ls.rows[0];
    auto htoks = split_ws(header);
    if (htoks.size() != 1)
        throw ParseError(hln, "graph header must be 'n=<int>'");
    int n = header_field(htoks[0], "n", hln);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < ls.rows.size(); ++i) {
        auto [ln, row] = ls.rows[i];
        auto toks = split_ws(row);
        if (toks.size() != 2)
            throw ParseError(ln, "graph edge must be 'u v'");
        int u = parse_int(toks[0], ln, "vertex index");
        int v = parse_int(toks[1], ln, "vertex index");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(ln, "vertex index out of range");
        if (u == v) throw ParseError(ln, "self-loop");
        if (u > v) std::swap(u, v);
        if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end())
            throw ParseError(ln, "duplicate edge");
        edges.emplace_back(u, v);
    }
    try {
        return graph_from_edges(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(ls.rows[0].first, e.what());
    }
}

Hypergraph parse_hypergraph(const std::string& text) {
    Lines ls = nonblank_lines(text);
    auto [hln, header] = ls.rows[0];
    auto htoks = split_ws(header);
    if (htoks.empty() || htoks.size() > 2)
        throw ParseError(hln, "hypergraph header must be 'n=<int> [r=<int>]'");
    int n = header_field(htoks[0], "n", hln);
    std::optional<int> r;
    if (htoks.size() == 2) r = header_field(htoks[1], "r", hln);
    std::vector<Mask> edges;
    for (std::size_t i = 1; i < ls.rows.size(); ++i) {
        auto [ln, row] = ls.rows[i];
        auto toks = split_ws(row);
        Mask e = parse_edge_tokens(toks, toks.size(), n, ln);
        if (r && popcount(e) != *r)
            throw ParseError(ln, "edge size does not match r=" + std::to_string(*r));
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw ParseError(ln, "duplicate edge");
        edges.push_back(e);
    }
    try {
        return hypergraph_from_edges(n, std::move(edges), /*allow_empty_edge=*/true);
    } catch (const std::invalid_argument& e) {
        throw ParseError(hln, e.what());
    }
}

std::pair<Hypergraph, EdgeColoring> parse_coloring(const std::string& text) {
    Lines ls = nonblank_lines(text);
    auto [hln, header] = ls.rows[0];
    auto htoks = split_ws(header);
    // header is "k=<int>"; an optional "n=<int> [r=<int>]" prefix is accepted
    int k = -1, n = -1;
    for (const auto& tok : htoks) {
        if (tok.rfind("k=", 0) == 0) k = header_field(tok, "k", hln);
        else if (tok.rfind("n=", 0) == 0) n = header_field(tok, "n", hln);
        else if (tok.rfind("r=", 0) == 0) (void)header_field(tok, "r", hln);
        else throw ParseError(hln, "unexpected header token '" + tok + "'");
    }
    if (k < 0) throw ParseError(hln, "coloring header must contain 'k=<int>'");

    std::vector<std::vector<std::string>> edge_toks;
    std::vector<int> colors;
    std::vector<int> line_nos;
    int max_vertex = -1;
    for (std::size_t i = 1; i < ls.rows.size(); ++i) {
        auto [ln, row] = ls.rows[i];
        auto toks = split_ws(row);
        auto colon = std::find(toks.begin(), toks.end(), ":");
        if (colon == toks.end() || colon + 2 != toks.end())
            throw ParseError(ln, "expected '<edge> : <color>'");
        int c = parse_int(*(colon + 1), ln, "color");
        if (c < 0 || c >= k)
            throw ParseError(ln, "color " + std::to_string(c) + " not in 0.." +
                                     std::to_string(k - 1));
        std::vector<std::string> ets(toks.begin(), colon);
        if (ets.empty()) throw ParseError(ln, "missing edge before ':'");
        for (const auto& t : ets)
            if (t != "-") max_vertex = std::max(max_vertex, parse_int(t, ln, "vertex index"));
        edge_toks.push_back(std::move(ets));
        colors.push_back(c);
        line_nos.push_back(ln);
    }
    if (n < 0) n = max_vertex + 1;
    std::vector<Mask> edges;
    for (std::size_t i = 0; i < edge_toks.size(); ++i) {
        Mask e = parse_edge_tokens(edge_toks[i], edge_toks[i].size(), n, line_nos[i]);
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw ParseError(line_nos[i], "duplicate edge");
        edges.push_back(e);
    }
    Hypergraph h;
    try {
        h = hypergraph_from_edges(n, std::move(edges), /*allow_empty_edge=*/true);
    } catch (const std::invalid_argument& e) {
        throw ParseError(hln, e.what());
    }
    EdgeColoring c;
    c.k = k;
    c.color = std::move(colors);
    return {std::move(h), std::move(c)};
}

std::string serialize(const Graph& g) {
    std::string out = "n=" + std::to_string(g.n) + "\n";
    for (auto [u, v] : g.edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string serialize(const Hypergraph& h) {
    std::string out = "n=" + std::to_string(h.n);
    if (h.uniformity) out += " r=" + std::to_string(*h.uniformity);
    out += "\n";
    for (Mask e : h.edges) {
        append_edge_line(out, e);
        out += "\n";
    }
    return out;
}

std::string serialize(const Hypergraph& host, const EdgeColoring& c) {
    std::string out = "k=" + std::to_string(c.k) + "\n";
    for (std::size_t i = 0; i < host.edges.size(); ++i) {
        append_edge_line(out, host.edges[i]);
        out += " : " + std::to_string(c.color[i]) + "\n";
    }
    return out;
}

namespace {

nlohmann::json edges_json(const std::vector<Mask>& edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (Mask e : edges) arr.push_back(mask_vertices(e));
    return arr;
}

} // namespace

nlohmann::json to_json(const Graph& g) {
    nlohmann::json j;
    j["schema"] = 1;
    j["type"] = "graph";
    j["n"] = g.n;
    nlohmann::json arr = nlohmann::json::array();
    for (auto [u, v] : g.edges) arr.push_back({u, v});
    j["edges"] = arr;
    return j;
}

nlohmann::json to_json(const Hypergraph& h) {
    nlohmann::json j;
    j["schema"] = 1;
    j["type"] = "hypergraph";
    j["n"] = h.n;
    if (h.uniformity) j["r"] = *h.uniformity;
    else j["r"] = nullptr;
    j["edges"] = edges_json(h.edges);
    return j;
}

nlohmann::json to_json(const Hypergraph& host, const EdgeColoring& c) {
    nlohmann::json j;
    j["schema"] = 1;
    j["type"] = "coloring";
    j["k"] = c.k;
    j["n"] = host.n;
    if (host.uniformity) j["r"] = *host.uniformity;
    else j["r"] = nullptr;
    j["edges"] = edges_json(host.edges);
    j["colors"] = c.color;
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return graph_from_edges(j.at("n").get<int>(), std::move(edges));
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    std::vector<Mask> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back(mask_of(e.get<std::vector<int>>()));
    return hypergraph_from_edges(j.at("n").get<int>(), std::move(edges), true);
}

std::pair<Hypergraph, EdgeColoring> coloring_from_json(const nlohmann::json& j) {
    std::vector<Mask> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back(mask_of(e.get<std::vector<int>>()));
    Hypergraph h = hypergraph_from_edges(j.at("n").get<int>(), std::move(edges), true);
    EdgeColoring c;
    c.k = j.at("k").get<int>();
    c.color = j.at("colors").get<std::vector<int>>();
    return {std::move(h), std::move(c)};
}

} // namespace berge
