#include "berge/detect.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "berge/canonical.hpp"

namespace berge {

namespace {

// Hyperedges covering a given host pair. Built eagerly for ordinary hosts;
// huge hosts (full powersets) fall back to memoized scans.
struct PairCover {
    const Hypergraph& h;
    bool eager = false;
    std::vector<std::vector<int>> table;
    std::unordered_map<int, std::vector<int>> lazy;

    explicit PairCover(const Hypergraph& host) : h(host) {
        std::size_t entries = 0;
        for (Mask e : h.edges) {
            int s = popcount(e);
            entries += static_cast<std::size_t>(s) * (s - 1) / 2;
        }
        if (entries <= (std::size_t{1} << 22)) {
            eager = true;
            table.resize(static_cast<std::size_t>(h.n) * h.n);
            for (std::size_t i = 0; i < h.edges.size(); ++i) {
                auto vs = mask_vertices(h.edges[i]);
                for (std::size_t a = 0; a < vs.size(); ++a)
                    for (std::size_t b = a + 1; b < vs.size(); ++b)
                        table[static_cast<std::size_t>(vs[a]) * h.n + vs[b]]
                            .push_back(static_cast<int>(i));
            }
        }
    }

    const std::vector<int>& get(int a, int b) {
        if (a > b) std::swap(a, b);
        if (eager) return table[static_cast<std::size_t>(a) * h.n + b];
        int key = a * kMaxVertices + b;
        auto it = lazy.find(key);
        if (it != lazy.end()) return it->second;
        std::vector<int> out;
        Mask need = vbit(a) | vbit(b);
        for (std::size_t i = 0; i < h.edges.size(); ++i)
            if ((h.edges[i] & need) == need) out.push_back(static_cast<int>(i));
        return lazy.emplace(key, std::move(out)).first->second;
    }
};

struct Matcher {
    std::vector<int> owner;   // host hyperedge -> pattern edge (-1 free)
    std::vector<char> seen;

    explicit Matcher(std::size_t host_edges) : owner(host_edges, -1) {}

    bool augment(int pe, const std::vector<std::vector<int>>& cand,
                 std::vector<int>& match) {
        for (int he : cand[pe]) {
            if (seen[he]) continue;
            seen[he] = 1;
            if (owner[he] < 0 || augment(owner[he], cand, match)) {
                owner[he] = pe;
                match[pe] = he;
                return true;
            }
        }
        return false;
    }

    // Saturating assignment of pattern edges to distinct hyperedges, or empty.
    std::optional<std::vector<int>> solve(const std::vector<std::vector<int>>& cand,
                                          int forced_pe = -1, int forced_he = -1) {
        std::size_t m = cand.size();
        std::vector<int> match(m, -1);
        std::fill(owner.begin(), owner.end(), -1);
        if (forced_pe >= 0) {
            owner[forced_he] = forced_pe;
            match[forced_pe] = forced_he;
        }
        for (std::size_t pe = 0; pe < m; ++pe) {
            if (static_cast<int>(pe) == forced_pe) continue;
            seen.assign(owner.size(), 0);
            if (forced_he >= 0) seen[forced_he] = 1; // forced edge stays put
            if (!augment(static_cast<int>(pe), cand, match)) return std::nullopt;
        }
        return match;
    }
};

struct BergeSearch {
    const Hypergraph& host;
    const Graph& pattern;
    int forced_edge; // -1 for unrestricted
    PairCover cover;
    Matcher matcher;
    std::vector<int> order;       // pattern vertices, decreasing degree
    std::vector<int> host_degree; // edges of size >= 2 at each host vertex
    std::vector<int> phi;
    Mask used = 0;
    std::vector<std::vector<int>> auts; // optional pattern automorphisms

    BergeSearch(const Hypergraph& h, const Graph& g, int forced,
                const DetectOptions& opts)
        : host(h), pattern(g), forced_edge(forced), cover(h),
          matcher(h.edges.size()), phi(g.n, -1) {
        order.resize(g.n);
        for (int v = 0; v < g.n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        host_degree.assign(h.n, 0);
        for (Mask e : h.edges)
            if (popcount(e) >= 2)
                for (int v : mask_vertices(e)) host_degree[v]++;
        if (opts.use_pattern_automorphisms && g.n <= 12) {
            auts = automorphisms(g);
            if (auts.size() <= 1) auts.clear();
        }
    }

    bool phi_is_orbit_minimal() const {
        for (const auto& sigma : auts) {
            for (int i = 0; i < pattern.n; ++i) {
                int a = phi[order[i]], b = phi[sigma[order[i]]];
                if (a != b) {
                    if (a > b) return false;
                    break;
                }
            }
        }
        return true;
    }

    std::optional<BergeWitness> try_assignment() {
        if (!auts.empty() && !phi_is_orbit_minimal()) return std::nullopt;
        std::size_t m = pattern.edges.size();
        std::vector<std::vector<int>> cand(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto [x, y] = pattern.edges[i];
            cand[i] = cover.get(phi[x], phi[y]);
            if (cand[i].empty()) return std::nullopt;
        }
        auto build = [&](const std::vector<int>& match) {
            BergeWitness w;
            w.phi = phi;
            w.assignment = match;
            return w;
        };
        if (forced_edge < 0) {
            if (auto match = matcher.solve(cand)) return build(*match);
            return std::nullopt;
        }
        for (std::size_t pe = 0; pe < m; ++pe) {
            if (std::find(cand[pe].begin(), cand[pe].end(), forced_edge) ==
                cand[pe].end())
                continue;
            if (auto match = matcher.solve(cand, static_cast<int>(pe), forced_edge))
                return build(*match);
        }
        return std::nullopt;
    }

    std::optional<BergeWitness> place(int depth) {
        if (depth == pattern.n) return try_assignment();
        int v = order[depth];
        for (int h = 0; h < host.n; ++h) {
            if ((used >> h) & 1) continue;
            if (host_degree[h] < pattern.degree(v)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int u = order[d];
                if (pattern.has_edge(u, v) && cover.get(phi[u], h).empty())
                    ok = false;
            }
            if (!ok) continue;
            phi[v] = h;
            used |= vbit(h);
            if (auto w = place(depth + 1)) return w;
            used &= ~vbit(h);
            phi[v] = -1;
        }
        return std::nullopt;
    }
};

std::optional<BergeWitness> find_berge_impl(const Hypergraph& host,
                                            const Graph& pattern, int forced,
                                            const DetectOptions& opts) {
    if (pattern.edges.empty())
        throw std::invalid_argument("find_berge: pattern needs at least one edge");
    if (pattern.n > host.n) return std::nullopt;
    if (host.edges.size() < pattern.edges.size()) return std::nullopt;
    BergeSearch s(host, pattern, forced, opts);
    return s.place(0);
}

} // namespace

std::optional<BergeWitness> find_berge(const Hypergraph& host, const Graph& pattern,
                                       const DetectOptions& opts) {
    return find_berge_impl(host, pattern, -1, opts);
}

std::optional<BergeWitness> find_berge_using(const Hypergraph& host,
                                             const Graph& pattern, int forced_edge,
                                             const DetectOptions& opts) {
    return find_berge_impl(host, pattern, forced_edge, opts);
}

std::optional<BergeWitness> find_berge_oracle(const Hypergraph& host,
                                              const Graph& pattern) {
    if (host.edges.size() > 12 || pattern.edges.size() > 6 || host.n > 8)
        throw std::invalid_argument("find_berge_oracle: instance beyond caps");
    if (pattern.edges.empty())
        throw std::invalid_argument("find_berge_oracle: pattern needs an edge");
    if (pattern.n > host.n) return std::nullopt;

    std::vector<int> phi(pattern.n, -1);
    std::vector<int> assign(pattern.edges.size(), -1);
    std::vector<char> vused(host.n, 0), eused(host.edges.size(), 0);

    auto assign_rec = [&](auto&& self, std::size_t pe) -> bool {
        if (pe == pattern.edges.size()) return true;
        auto [x, y] = pattern.edges[pe];
        Mask need = vbit(phi[x]) | vbit(phi[y]);
        for (std::size_t he = 0; he < host.edges.size(); ++he) {
            if (eused[he] || (host.edges[he] & need) != need) continue;
            eused[he] = 1;
            assign[pe] = static_cast<int>(he);
            if (self(self, pe + 1)) return true;
            eused[he] = 0;
            assign[pe] = -1;
        }
        return false;
    };
    auto phi_rec = [&](auto&& self, int v) -> bool {
        if (v == pattern.n) return assign_rec(assign_rec, 0);
        for (int h = 0; h < host.n; ++h) {
            if (vused[h]) continue;
            vused[h] = 1;
            phi[v] = h;
            if (self(self, v + 1)) return true;
            vused[h] = 0;
            phi[v] = -1;
        }
        return false;
    };
    if (!phi_rec(phi_rec, 0)) return std::nullopt;
    BergeWitness w;
    w.phi = phi;
    w.assignment = assign;
    return w;
}

VerifyResult verify_witness(const Hypergraph& host, const Graph& pattern,
                            const BergeWitness& w) {
    auto fail = [](std::string r) { return VerifyResult{false, std::move(r)}; };
    if (static_cast<int>(w.phi.size()) != pattern.n)
        return fail("phi size");
    for (int h : w.phi)
        if (h < 0 || h >= host.n) return fail("phi out of range");
    Mask seen = 0;
    for (int h : w.phi) {
        if ((seen >> h) & 1) return fail("phi not injective");
        seen |= vbit(h);
    }
    if (w.assignment.size() != pattern.edges.size())
        return fail("assignment size");
    for (int he : w.assignment)
        if (he < 0 || he >= static_cast<int>(host.edges.size()))
            return fail("assignment out of range");
    std::vector<int> sorted = w.assignment;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail("assignment not injective");
    for (std::size_t i = 0; i < pattern.edges.size(); ++i) {
        auto [x, y] = pattern.edges[i];
        Mask need = vbit(w.phi[x]) | vbit(w.phi[y]);
        if ((host.edges[w.assignment[i]] & need) != need)
            return fail("containment");
    }
    return VerifyResult{true, ""};
}

std::optional<MonoHit> mono_berge_in_coloring(const Hypergraph& host,
                                              const EdgeColoring& c,
                                              const Graph& pattern) {
    if (!coloring_valid(host, c))
        throw std::invalid_argument("mono_berge_in_coloring: coloring not total");
    for (int color = 0; color < c.k; ++color) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < host.edges.size(); ++i)
            if (c.color[i] == color) idx.push_back(static_cast<int>(i));
        if (idx.size() < pattern.edges.size()) continue;
        Hypergraph cls = host.restrict_to(idx);
        if (auto w = find_berge(cls, pattern)) {
            for (int& he : w->assignment) he = idx[he];
            return MonoHit{color, std::move(*w)};
        }
    }
    return std::nullopt;
}

namespace {

std::optional<std::vector<int>> subgraph_dfs(const Graph& host, const Graph& pattern,
                                             std::vector<int>& phi, Mask used,
                                             const std::vector<int>& order,
                                             std::size_t depth) {
    if (depth == order.size()) return phi;
    int v = order[depth];
    if (phi[v] >= 0) return subgraph_dfs(host, pattern, phi, used, order, depth + 1);
    for (int h = 0; h < host.n; ++h) {
        if ((used >> h) & 1) continue;
        if (host.degree(h) < pattern.degree(v)) continue;
        bool ok = true;
        for (int u = 0; u < pattern.n && ok; ++u)
            if (phi[u] >= 0 && pattern.has_edge(u, v) && !host.has_edge(phi[u], h))
                ok = false;
        if (!ok) continue;
        phi[v] = h;
        if (auto r = subgraph_dfs(host, pattern, phi, used | vbit(h), order, depth + 1))
            return r;
        phi[v] = -1;
    }
    return std::nullopt;
}

std::vector<int> subgraph_order(const Graph& pattern) {
    std::vector<int> order(pattern.n);
    for (int v = 0; v < pattern.n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (pattern.degree(a) != pattern.degree(b))
            return pattern.degree(a) > pattern.degree(b);
        return a < b;
    });
    return order;
}

} // namespace

std::optional<std::vector<int>> find_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.n > host.n) return std::nullopt;
    std::vector<int> phi(pattern.n, -1);
    return subgraph_dfs(host, pattern, phi, 0, subgraph_order(pattern), 0);
}

std::optional<std::vector<int>> find_subgraph_using(const Graph& host,
                                                    const Graph& pattern, int u,
                                                    int v) {
    if (pattern.n > host.n || !host.has_edge(u, v)) return std::nullopt;
    auto order = subgraph_order(pattern);
    for (auto [a, b] : pattern.edges) {
        for (int flip = 0; flip < 2; ++flip) {
            int pa = flip ? b : a, pb = flip ? a : b;
            std::vector<int> phi(pattern.n, -1);
            phi[pa] = u;
            phi[pb] = v;
            bool ok = true; // pre-placed pair must respect other placed edges (none yet)
            if (host.degree(u) < pattern.degree(pa) ||
                host.degree(v) < pattern.degree(pb))
                ok = false;
            if (!ok) continue;
            if (auto r = subgraph_dfs(host, pattern, phi, vbit(u) | vbit(v), order, 0))
                return r;
        }
    }
    return std::nullopt;
}

} // namespace berge
