#pragma once

#include <optional>
#include <vector>

#include "berge/detect.hpp"
#include "berge/types.hpp"

namespace berge {

/// One way of extending G-v: for each former neighbor q_i of v, a new edge
/// q_i r_i not in G-v. `result` is the extension graph on compact labels;
/// result_ids maps its vertices back to labels of G (fresh vertices get
/// labels >= G.n).
struct ExtensionSpec {
    Graph base;
    int removed_vertex = 0;
    std::vector<std::pair<int, int>> new_edges; // (q_i, r_i) in base labels
    Graph result;
    std::vector<int> result_ids;

    int result_index_of(int base_label) const;
};

/// Every extension configuration of G-v (fresh targets normalized by first
/// use); may contain isomorphic results under different labelings.
std::vector<ExtensionSpec> gstar_extension_specs(const Graph& g, int v);

/// The family G*(v), deduplicated up to isomorphism. Includes G itself.
std::vector<Graph> gstar_family(const Graph& g, int v);

/// Union of G*(v) over all non-isolated v, up to isomorphism.
std::vector<Graph> gstar_union(const Graph& g);

/// Graph coloring induced on V(host) minus X by an (r-2)-set X:
/// pair {x,y} inherits the color of the host edge X+{x,y}.
struct ShadowColoring {
    std::vector<int> vertex_ids; // shadow vertex -> host vertex
    Graph pairs;                 // complete graph on the shadow vertices
    EdgeColoring colors;
};

ShadowColoring shadow_coloring(const Hypergraph& host, const EdgeColoring& c, Mask x);

/// Lifts a monochromatic copy of spec.result in the shadow over X to a
/// monochromatic Berge-(spec.base) witness in the host.
/// `embedding`: result vertex index -> host vertex (disjoint from X).
struct LiftResult {
    int color;
    BergeWitness witness;
};

LiftResult shadow_lift(const Hypergraph& host, const EdgeColoring& c, Mask x,
                       const ExtensionSpec& spec, const std::vector<int>& embedding);

/// Least vertex whose removal leaves G acyclic, if one exists.
std::optional<int> acyclic_reducible(const Graph& g);

} // namespace berge
