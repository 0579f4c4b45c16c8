#include "berge/types.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace berge {

std::vector<int> mask_vertices(Mask m) {
    std::vector<int> vs;
    while (m) {
        vs.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return vs;
}

Mask mask_of(const std::vector<int>& vs) {
    Mask m = 0;
    for (int v : vs) m |= vbit(v);
    return m;
}

Graph graph_from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph: vertex count out of range");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("graph: vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge");
    Graph g;
    g.n = n;
    g.adj.assign(n, 0);
    g.edges = std::move(edges);
    for (auto [u, v] : g.edges) {
        g.adj[u] |= vbit(v);
        g.adj[v] |= vbit(u);
    }
    return g;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return graph_from_edges(n, std::move(es));
}

int Hypergraph::degree(int v) const {
    int d = 0;
    for (Mask e : edges)
        if ((e >> v) & 1) ++d;
    return d;
}

Hypergraph Hypergraph::restrict_to(const std::vector<int>& edge_indices) const {
    Hypergraph h;
    h.n = n;
    h.uniformity = uniformity;
    h.edges.reserve(edge_indices.size());
    for (int i : edge_indices) h.edges.push_back(edges[i]);
    return h;
}

Hypergraph hypergraph_from_edges(int n, std::vector<Mask> edges,
                                 bool allow_empty_edge) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("hypergraph: vertex count out of range");
    Mask range = full_mask(n);
    std::optional<int> unif;
    bool first = true;
    for (Mask e : edges) {
        if (!allow_empty_edge && e == 0)
            throw std::invalid_argument("hypergraph: empty edge");
        if (e & ~range) throw std::invalid_argument("hypergraph: vertex out of range");
        int sz = popcount(e);
        if (first) {
            unif = sz;
            first = false;
        } else if (unif && *unif != sz) {
            unif.reset();
        }
    }
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("hypergraph: duplicate edge");
    Hypergraph h;
    h.n = n;
    h.uniformity = unif;
    h.edges = std::move(edges);
    return h;
}

Hypergraph complete_hypergraph(int n, int r) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("complete_hypergraph: n out of range");
    if (r < 1 || r > n)
        throw std::invalid_argument("complete_hypergraph: need 1 <= r <= n");
    Hypergraph h;
    h.n = n;
    h.uniformity = r;
    // Gosper's hack walks the r-subsets in ascending mask order.
    Mask m = full_mask(r);
    Mask limit = full_mask(n);
    while (m <= limit) {
        h.edges.push_back(m);
        if (m == (limit & ~full_mask(n - r))) break; // highest r-subset
        Mask c = m & -m;
        Mask rr = m + c;
        m = (((rr ^ m) >> 2) / c) | rr;
    }
    return h;
}

Hypergraph powerset_hypergraph(int n) {
    if (n < 1 || n > 20)
        throw std::invalid_argument("powerset_hypergraph: need 1 <= n <= 20");
    Hypergraph h;
    h.n = n;
    h.edges.reserve(std::size_t{1} << n);
    for (Mask m = 0; m <= full_mask(n); ++m) h.edges.push_back(m);
    return h;
}

int EdgeColoring::used_colors() const {
    std::vector<char> seen(k, 0);
    int used = 0;
    for (int c : color)
        if (c >= 0 && c < k && !seen[c]) {
            seen[c] = 1;
            ++used;
        }
    return used;
}

bool coloring_valid(const Hypergraph& host, const EdgeColoring& c) {
    if (c.color.size() != host.edges.size()) return false;
    for (int x : c.color)
        if (x < 0 || x >= c.k) return false;
    return true;
}

} // namespace berge
