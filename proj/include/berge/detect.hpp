#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berge/types.hpp"

namespace berge {

/// Certificate that H contains a Berge-G subhypergraph: an injection phi of
/// the pattern vertices into host vertices plus an injective assignment of
/// pattern edges to host hyperedge indices, each hyperedge containing the
/// images of its pattern edge's endpoints.
struct BergeWitness {
    std::vector<int> phi;        // pattern vertex -> host vertex
    std::vector<int> assignment; // pattern edge index -> host hyperedge index
};

struct VerifyResult {
    bool ok = false;
    std::string reason; // empty when ok
    explicit operator bool() const { return ok; }
};

struct DetectOptions {
    bool use_pattern_automorphisms = false; // optional speedup, off by default
};

std::optional<BergeWitness> find_berge(const Hypergraph& host, const Graph& pattern,
                                       const DetectOptions& opts = {});

/// Like find_berge but the witness must use host hyperedge `forced_edge`.
/// Sound incremental test: if H-e was Berge-G-free, any copy in H uses e.
std::optional<BergeWitness> find_berge_using(const Hypergraph& host,
                                             const Graph& pattern, int forced_edge,
                                             const DetectOptions& opts = {});

/// Independent brute-force reference: plain enumeration of injections and
/// injective assignments, no matching machinery. Caps: |E(H)| <= 12,
/// |E(G)| <= 6, n(H) <= 8.
std::optional<BergeWitness> find_berge_oracle(const Hypergraph& host,
                                              const Graph& pattern);

VerifyResult verify_witness(const Hypergraph& host, const Graph& pattern,
                            const BergeWitness& w);

struct MonoHit {
    int color;
    BergeWitness witness; // assignment indices refer to the host edge list
};

/// Least color whose class contains a Berge-pattern copy, if any.
std::optional<MonoHit> mono_berge_in_coloring(const Hypergraph& host,
                                              const EdgeColoring& c,
                                              const Graph& pattern);

// Ordinary (not induced) subgraph embedding; for 2-uniform hosts Berge
// containment degenerates to this.
std::optional<std::vector<int>> find_subgraph(const Graph& host, const Graph& pattern);
std::optional<std::vector<int>> find_subgraph_using(const Graph& host,
                                                    const Graph& pattern, int u, int v);

} // namespace berge
