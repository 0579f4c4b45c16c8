#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace berge {

/// Vertex sets are 64-bit masks; vertices are dense integers 0..n-1.
using Mask = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr Mask vbit(int v) { return Mask{1} << v; }

constexpr Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_vertex(Mask m) { return std::countr_zero(m); }

std::vector<int> mask_vertices(Mask m);
Mask mask_of(const std::vector<int>& vs);

/// Labeled simple graph. Edge list is duplicate-free, each pair (u,v) with
/// u < v, sorted lexicographically, consistent with adj.
struct Graph {
    int n = 0;
    std::vector<Mask> adj;
    std::vector<std::pair<int, int>> edges;

    int degree(int v) const { return popcount(adj[v]); }
    bool has_edge(int u, int v) const { return u != v && (adj[u] >> v) & 1; }
    Mask edge_mask(int idx) const {
        return vbit(edges[idx].first) | vbit(edges[idx].second);
    }
};

Graph graph_from_edges(int n, std::vector<std::pair<int, int>> edges);
Graph complete_graph(int n);

/// Hypergraph as a list of distinct vertex-set masks. `uniformity` is set
/// when every edge has exactly that many vertices. The empty edge is legal
/// only in powerset-style hosts (it can never cover a pattern edge).
struct Hypergraph {
    int n = 0;
    std::optional<int> uniformity;
    std::vector<Mask> edges;

    int degree(int v) const;
    Hypergraph restrict_to(const std::vector<int>& edge_indices) const;
};

Hypergraph hypergraph_from_edges(int n, std::vector<Mask> edges,
                                 bool allow_empty_edge = false);
Hypergraph complete_hypergraph(int n, int r);
Hypergraph powerset_hypergraph(int n);

/// Total map from edge index to a color in 0..k-1. The set of used colors
/// may be a strict subset of 0..k-1.
struct EdgeColoring {
    int k = 0;
    std::vector<int> color;

    int used_colors() const;
};

bool coloring_valid(const Hypergraph& host, const EdgeColoring& c);

} // namespace berge
