#include "berge/gstar.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "berge/canonical.hpp"

namespace berge {

namespace {

struct ExtensionBuilder {
    const Graph& g;
    int v;
    std::vector<int> qs;                     // N(v), ascending
    std::vector<std::pair<int, int>> chosen; // (q_i, r_i)
    int fresh_used = 0;
    std::vector<ExtensionSpec> out;

    bool edge_in_g_minus_v(int a, int b) const {
        return a != v && b != v && g.has_edge(a, b);
    }

    bool duplicates_chosen(int a, int b) const {
        for (auto [c, d] : chosen)
            if ((a == c && b == d) || (a == d && b == c)) return true;
        return false;
    }

    void emit() {
        ExtensionSpec spec;
        spec.base = g;
        spec.removed_vertex = v;
        spec.new_edges = chosen;
        // vertex set: V(G)-v in ascending order, then the fresh labels
        for (int u = 0; u < g.n; ++u)
            if (u != v) spec.result_ids.push_back(u);
        for (int f = 0; f < fresh_used; ++f) spec.result_ids.push_back(g.n + f);
        std::vector<int> index(g.n + fresh_used, -1);
        for (std::size_t i = 0; i < spec.result_ids.size(); ++i)
            index[spec.result_ids[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : g.edges)
            if (a != v && b != v) edges.emplace_back(index[a], index[b]);
        for (auto [a, b] : chosen) edges.emplace_back(index[a], index[b]);
        spec.result = graph_from_edges(static_cast<int>(spec.result_ids.size()),
                                       std::move(edges));
        out.push_back(std::move(spec));
    }

    void rec(std::size_t i) {
        if (i == qs.size()) {
            emit();
            return;
        }
        int q = qs[i];
        // r_i may be any surviving vertex or a fresh one; fresh targets are
        // interchangeable, so only already-used fresh labels plus one unused
        // label need to be tried
        for (int r = 0; r < g.n + fresh_used + 1; ++r) {
            if (r == v || r == q) continue;
            if (r < g.n && edge_in_g_minus_v(q, r)) continue;
            if (duplicates_chosen(q, r)) continue;
            bool is_new_fresh = (r == g.n + fresh_used);
            chosen.emplace_back(q, r);
            if (is_new_fresh) ++fresh_used;
            rec(i + 1);
            if (is_new_fresh) --fresh_used;
            chosen.pop_back();
        }
    }
};

} // namespace

int ExtensionSpec::result_index_of(int base_label) const {
    for (std::size_t i = 0; i < result_ids.size(); ++i)
        if (result_ids[i] == base_label) return static_cast<int>(i);
    throw std::invalid_argument("result_index_of: label not in extension");
}

std::vector<ExtensionSpec> gstar_extension_specs(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("gstar: vertex out of range");
    if (g.degree(v) == 0)
        throw std::invalid_argument("gstar: removed vertex must not be isolated");
    ExtensionBuilder b{g, v, mask_vertices(g.adj[v]), {}, 0, {}};
    b.rec(0);
    return b.out;
}

std::vector<Graph> gstar_family(const Graph& g, int v) {
    std::vector<Graph> family;
    std::vector<CanonicalCode> codes;
    for (const auto& spec : gstar_extension_specs(g, v)) {
        CanonicalCode code = canonical_code(spec.result);
        if (std::find(codes.begin(), codes.end(), code) == codes.end()) {
            codes.push_back(std::move(code));
            family.push_back(spec.result);
        }
    }
    return family;
}

std::vector<Graph> gstar_union(const Graph& g) {
    if (g.edges.empty())
        throw std::invalid_argument("gstar_union: graph needs at least one edge");
    std::vector<Graph> family;
    std::vector<CanonicalCode> codes;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == 0) continue;
        for (const auto& member : gstar_family(g, v)) {
            CanonicalCode code = canonical_code(member);
            if (std::find(codes.begin(), codes.end(), code) == codes.end()) {
                codes.push_back(std::move(code));
                family.push_back(member);
            }
        }
    }
    return family;
}

namespace {

std::unordered_map<Mask, int> edge_lookup(const Hypergraph& h) {
    std::unordered_map<Mask, int> m;
    m.reserve(h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        m[h.edges[i]] = static_cast<int>(i);
    return m;
}

int require_edge(const std::unordered_map<Mask, int>& lut, Mask e) {
    auto it = lut.find(e);
    if (it == lut.end())
        throw std::invalid_argument("shadow: host is missing a required edge");
    return it->second;
}

} // namespace

ShadowColoring shadow_coloring(const Hypergraph& host, const EdgeColoring& c, Mask x) {
    if (!host.uniformity)
        throw std::invalid_argument("shadow_coloring: host must be r-uniform");
    int r = *host.uniformity;
    if (popcount(x) != r - 2)
        throw std::invalid_argument("shadow_coloring: |X| must equal r-2");
    if (x & ~full_mask(host.n))
        throw std::invalid_argument("shadow_coloring: X outside host vertices");
    if (!coloring_valid(host, c))
        throw std::invalid_argument("shadow_coloring: coloring not total");

    ShadowColoring sh;
    for (int v = 0; v < host.n; ++v)
        if (!((x >> v) & 1)) sh.vertex_ids.push_back(v);
    sh.pairs = complete_graph(static_cast<int>(sh.vertex_ids.size()));
    auto lut = edge_lookup(host);
    sh.colors.k = c.k;
    sh.colors.color.reserve(sh.pairs.edges.size());
    for (auto [i, j] : sh.pairs.edges) {
        Mask e = x | vbit(sh.vertex_ids[i]) | vbit(sh.vertex_ids[j]);
        sh.colors.color.push_back(c.color[require_edge(lut, e)]);
    }
    return sh;
}

LiftResult shadow_lift(const Hypergraph& host, const EdgeColoring& c, Mask x,
                       const ExtensionSpec& spec, const std::vector<int>& embedding) {
    if (!host.uniformity || popcount(x) != *host.uniformity - 2)
        throw std::invalid_argument("shadow_lift: |X| must equal r-2");
    const Graph& base = spec.base;
    const Graph& result = spec.result;
    if (static_cast<int>(embedding.size()) != result.n)
        throw std::invalid_argument("shadow_lift: embedding size mismatch");
    Mask embedded = 0;
    for (int h : embedding) {
        if (h < 0 || h >= host.n || ((embedded >> h) & 1))
            throw std::invalid_argument("shadow_lift: embedding not injective");
        embedded |= vbit(h);
    }
    if (embedded & x)
        throw std::invalid_argument("shadow_lift: X intersects the copy");

    auto lut = edge_lookup(host);
    int v = spec.removed_vertex;
    std::unordered_map<int, int> new_target; // q -> r
    for (auto [q, r] : spec.new_edges) new_target[q] = r;

    // phi(v) is a vertex of X (the least); for r = 2 the identity extension's
    // single re-attachment vertex stands in for X.
    int phi_v;
    if (x != 0) {
        phi_v = lowest_vertex(x);
    } else {
        int common = -1;
        for (auto [q, r] : spec.new_edges) {
            (void)q;
            if (common == -1) common = r;
            if (r != common) common = -2;
        }
        if (common < 0)
            throw std::invalid_argument(
                "shadow_lift: r=2 supports only the identity extension");
        phi_v = embedding[spec.result_index_of(common)];
    }

    BergeWitness w;
    w.phi.assign(base.n, -1);
    for (int u = 0; u < base.n; ++u)
        w.phi[u] = (u == v) ? phi_v : embedding[spec.result_index_of(u)];

    // v-edges are covered by the hyperedges over the new pairs q_i r_i; the
    // surviving edges of G-v by the hyperedges over their own endpoints
    int color = -1;
    for (auto [a, b] : base.edges) {
        Mask cover;
        if (a == v || b == v) {
            int q = (a == v) ? b : a;
            int r = new_target.at(q);
            cover = x | vbit(embedding[spec.result_index_of(q)]) |
                    vbit(embedding[spec.result_index_of(r)]);
        } else {
            cover = x | vbit(embedding[spec.result_index_of(a)]) |
                    vbit(embedding[spec.result_index_of(b)]);
        }
        int idx = require_edge(lut, cover);
        if (color == -1) color = c.color[idx];
        else if (c.color[idx] != color)
            throw std::invalid_argument("shadow_lift: copy is not monochromatic");
        w.assignment.push_back(idx);
    }
    return LiftResult{color, std::move(w)};
}

std::optional<int> acyclic_reducible(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> parent(g.n);
        for (int i = 0; i < g.n; ++i) parent[i] = i;
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        bool cyclic = false;
        for (auto [a, b] : g.edges) {
            if (a == v || b == v) continue;
            int ra = find(a), rb = find(b);
            if (ra == rb) {
                cyclic = true;
                break;
            }
            parent[ra] = rb;
        }
        if (!cyclic) return v;
    }
    return std::nullopt;
}

} // namespace berge
