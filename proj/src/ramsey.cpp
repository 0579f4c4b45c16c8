#include "berge/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "berge/canonical.hpp"
#include "berge/constructions.hpp"
#include "berge/detect.hpp"
#include "berge/gstar.hpp"
#include "berge/patterns.hpp"
#include "berge/turan.hpp"

namespace berge {

namespace {

struct SharedSearchState {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> truncated{false};
    std::atomic<int> sat_prefix{INT32_MAX}; // least prefix index that found Sat
    std::uint64_t budget;
};

// One worker's view of the coloring search. Class membership is kept
// incrementally per color; 2-uniform hosts additionally keep adjacency
// masks per color so containment tests skip the Berge machinery.
struct ColoringSearch {
    const Hypergraph& host;
    int k;
    const std::vector<Graph>& patterns;
    const SearchOptions& opts;
    SharedSearchState& shared;
    int my_prefix_index;

    bool graph_mode;
    std::size_t min_pattern_edges;
    std::vector<int> color;                     // per host edge, -1 unassigned
    std::vector<std::vector<int>> class_edges;  // per color, host edge indices
    std::vector<std::vector<Mask>> class_adj;   // per color, graph-mode adjacency
    std::optional<EdgeColoring> found;

    ColoringSearch(const Hypergraph& h, int k_, const std::vector<Graph>& pats,
                   const SearchOptions& o, SharedSearchState& s, int prefix_index)
        : host(h), k(k_), patterns(pats), opts(o), shared(s),
          my_prefix_index(prefix_index) {
        graph_mode = host.uniformity && *host.uniformity == 2;
        min_pattern_edges = SIZE_MAX;
        for (const auto& g : patterns)
            min_pattern_edges = std::min(min_pattern_edges, g.edges.size());
        color.assign(host.edges.size(), -1);
        class_edges.resize(k);
        if (graph_mode) class_adj.assign(k, std::vector<Mask>(host.n, 0));
    }

    void push(int e, int c) {
        color[e] = c;
        class_edges[c].push_back(e);
        if (graph_mode) {
            int u = lowest_vertex(host.edges[e]);
            int v = lowest_vertex(host.edges[e] & (host.edges[e] - 1));
            class_adj[c][u] |= vbit(v);
            class_adj[c][v] |= vbit(u);
        }
    }

    void pop(int e, int c) {
        color[e] = -1;
        class_edges[c].pop_back();
        if (graph_mode) {
            int u = lowest_vertex(host.edges[e]);
            int v = lowest_vertex(host.edges[e] & (host.edges[e] - 1));
            class_adj[c][u] &= ~vbit(v);
            class_adj[c][v] &= ~vbit(u);
        }
    }

    // Does the class of color c contain a pattern copy using edge e?
    bool class_hits(int e, int c) {
        if (class_edges[c].size() < min_pattern_edges) return false;
        if (graph_mode) {
            Graph cls;
            cls.n = host.n;
            cls.adj = class_adj[c];
            int u = lowest_vertex(host.edges[e]);
            int v = lowest_vertex(host.edges[e] & (host.edges[e] - 1));
            for (const auto& pat : patterns) {
                bool hit = find_subgraph_using(cls, pat, u, v).has_value();
                if (opts.prune_audit)
                    opts.prune_audit(host.restrict_to(class_edges[c]), pat, hit);
                if (hit) return true;
            }
            return false;
        }
        Hypergraph cls = host.restrict_to(class_edges[c]);
        int local = static_cast<int>(cls.edges.size()) - 1; // e was pushed last
        for (const auto& pat : patterns) {
            if (cls.edges.size() < pat.edges.size()) continue;
            bool hit = find_berge_using(cls, pat, local).has_value();
            if (opts.prune_audit) opts.prune_audit(cls, pat, hit);
            if (hit) return true;
        }
        return false;
    }

    bool aborted() const {
        return shared.truncated.load(std::memory_order_relaxed) ||
               shared.sat_prefix.load(std::memory_order_relaxed) < my_prefix_index;
    }

    // Returns true iff a good total coloring was found in this subtree.
    bool dfs(std::size_t e, int max_used) {
        if (e == host.edges.size()) {
            EdgeColoring c;
            c.k = k;
            c.color = color;
            found = std::move(c);
            return true;
        }
        int limit = std::min(max_used + 1, k - 1);
        for (int c = 0; c <= limit; ++c) {
            if (aborted()) return false;
            if (shared.nodes.fetch_add(1, std::memory_order_relaxed) >=
                shared.budget) {
                shared.truncated.store(true, std::memory_order_relaxed);
                return false;
            }
            push(static_cast<int>(e), c);
            if (!class_hits(static_cast<int>(e), c) &&
                dfs(e + 1, std::max(max_used, c)))
                return true;
            pop(static_cast<int>(e), c);
        }
        return false;
    }

    // Enumerates the clean partial colorings of the first `depth` edges.
    void prefixes(std::size_t e, int max_used, std::size_t depth,
                  std::vector<std::vector<int>>& out) {
        if (e == depth) {
            out.emplace_back(color.begin(), color.begin() + depth);
            return;
        }
        int limit = std::min(max_used + 1, k - 1);
        for (int c = 0; c <= limit; ++c) {
            shared.nodes.fetch_add(1, std::memory_order_relaxed);
            push(static_cast<int>(e), c);
            if (!class_hits(static_cast<int>(e), c))
                prefixes(e + 1, std::max(max_used, c), depth, out);
            pop(static_cast<int>(e), c);
        }
    }

    bool replay(const std::vector<int>& prefix) {
        int max_used = -1;
        for (std::size_t e = 0; e < prefix.size(); ++e) {
            push(static_cast<int>(e), prefix[e]);
            max_used = std::max(max_used, prefix[e]);
        }
        return dfs(prefix.size(), max_used);
    }
};

} // namespace

ColoringSearchResult exists_good_coloring(const Hypergraph& host, int k,
                                          const std::vector<Graph>& patterns,
                                          const SearchOptions& opts) {
    if (k < 1) throw std::invalid_argument("exists_good_coloring: need k >= 1");
    if (patterns.empty())
        throw std::invalid_argument("exists_good_coloring: need a pattern");
    SharedSearchState shared;
    shared.budget = opts.node_budget;

    ColoringSearchResult out;
    if (host.edges.empty()) {
        out.status = SearchStatus::Sat;
        out.coloring = EdgeColoring{k, {}};
        return out;
    }

    int threads = std::max(1, opts.threads);
    if (threads == 1) {
        ColoringSearch s(host, k, patterns, opts, shared, 0);
        bool sat = s.dfs(0, -1);
        out.nodes = shared.nodes.load();
        if (sat) {
            out.status = SearchStatus::Sat;
            out.coloring = std::move(s.found);
        } else if (shared.truncated.load()) {
            out.status = SearchStatus::Unknown;
        } else {
            out.status = SearchStatus::Unsat;
        }
        return out;
    }

    // Split the top of the tree into prefix tasks; Unsat needs every task to
    // finish, Sat reports the least prefix that succeeded so the answer does
    // not depend on scheduling.
    std::size_t depth = std::min<std::size_t>(host.edges.size(),
                                              k >= 3 ? 5 : 7);
    std::vector<std::vector<int>> tasks;
    {
        ColoringSearch gen(host, k, patterns, opts, shared, 0);
        gen.prefixes(0, -1, depth, tasks);
    }
    std::vector<std::optional<EdgeColoring>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            if (shared.truncated.load() ||
                shared.sat_prefix.load() < static_cast<int>(i))
                continue;
            ColoringSearch s(host, k, patterns, opts, shared, static_cast<int>(i));
            if (s.replay(tasks[i])) {
                results[i] = std::move(s.found);
                int expect = shared.sat_prefix.load();
                while (static_cast<int>(i) < expect &&
                       !shared.sat_prefix.compare_exchange_weak(expect,
                                                                static_cast<int>(i)))
                    ;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    out.nodes = shared.nodes.load();
    int sat_at = shared.sat_prefix.load();
    if (sat_at != INT32_MAX) {
        out.status = SearchStatus::Sat;
        out.coloring = results[sat_at];
    } else if (shared.truncated.load()) {
        out.status = SearchStatus::Unknown;
    } else {
        out.status = SearchStatus::Unsat;
    }
    return out;
}

ColoringSearchResult exists_good_coloring(int n, int r, int k, const Graph& pattern,
                                          const SearchOptions& opts) {
    return exists_good_coloring(complete_hypergraph(n, r), k, {pattern}, opts);
}

int counting_upper_bound(int k, int r,
                         const std::function<Rational(long long)>& turan_upper) {
    if (k < 1 || r < 2) throw std::invalid_argument("counting_upper_bound: bad args");
    for (long long n = 1;; ++n) {
        Rational lhs(binomial(n, r));
        Rational rhs = Rational(BigInt(k)) * turan_upper(n);
        if (lhs > rhs) return static_cast<int>(n);
        if (n > 100'000'000)
            throw std::runtime_error("counting_upper_bound: no crossover found");
    }
}

int shadow_upper_bound(int graph_ramsey_value, int r) {
    if (graph_ramsey_value < 1 || r < 2)
        throw std::invalid_argument("shadow_upper_bound: bad args");
    return graph_ramsey_value + r - 2;
}

std::optional<long long> acyclic_upper_bound(const Graph& g, int k, int r) {
    if (!acyclic_reducible(g)) return std::nullopt;
    return 4LL * k * g.n + r - 2;
}

Rational kstar_bound(int k, const Rational& eps) {
    if (k < 1) throw std::invalid_argument("kstar_bound: need k >= 1");
    if (eps <= Rational(0) || eps >= Rational(1, 4))
        throw std::invalid_argument("kstar_bound: need 0 < eps < 1/4");
    Rational one_plus = Rational(1) + eps;
    Rational value(factorial(k));
    for (int i = 0; i < k; ++i) value *= one_plus;
    value /= eps;
    return value;
}

KstarOptimum kstar_bound_opt(int k) {
    std::optional<KstarOptimum> best;
    for (int i = 1; i <= 249; ++i) {
        Rational eps(i, 1000);
        Rational value = kstar_bound(k, eps);
        if (!best || value < best->value) best = KstarOptimum{eps, value};
    }
    return *best;
}

namespace {

long long pow2ll(int e) { return 1LL << e; }

long long ceil_div_ll(long long a, long long b) { return (a + b - 1) / b; }

void take_upper(BoundReport& r, long long value, const std::string& prov) {
    if (!r.upper || value < *r.upper) {
        r.upper = value;
        r.provenance.push_back("upper:" + prov);
    }
}

void take_lower(BoundReport& r, long long value, const std::string& prov) {
    if (!r.lower || value > *r.lower) {
        r.lower = value;
        r.provenance.push_back("lower:" + prov);
    }
}

void settle_exact(BoundReport& r) {
    if (r.lower && r.upper && *r.lower == *r.upper) r.exact = *r.lower;
}

} // namespace

BoundReport ramsey_bounds(const Graph& pattern, int k, int r) {
    if (k < 2 || r < 2) throw std::invalid_argument("ramsey_bounds: need k,r >= 2");
    BoundReport rep;
    Graph k3 = *builtin_pattern("k3");
    Graph k4 = *builtin_pattern("k4");
    bool is_k3 = isomorphic(pattern, k3);
    bool is_k4 = isomorphic(pattern, k4);

    if (is_k3 && r >= 3) {
        take_upper(rep, counting_upper_bound(k, r, [&](long long n) {
                       return gyori_bound(n, r);
                   }),
                   "counting");
    }
    if (auto ub = acyclic_upper_bound(pattern, k, r))
        take_upper(rep, *ub, "formula:acyclic");
    if (is_k4 && r >= 3) {
        // R(K4*(v),k) <= kstar bound, then the shadow step adds r-2
        Rational b = kstar_bound_opt(k).value;
        long long graph_bound = static_cast<long long>(floor_div(b));
        take_upper(rep, shadow_upper_bound(static_cast<int>(graph_bound), r),
                   "formula:kstar+shadow");
    }

    if (is_k3 && r == 3) {
        struct Fixed { const char* name; int n; int colors; };
        for (auto [name, n, colors] : {Fixed{"K4_3_2COL", 4, 2},
                                       Fixed{"K5_3_4COL", 5, 4},
                                       Fixed{"K6_3_5COL", 6, 5},
                                       Fixed{"K7_3_6COL", 7, 6}})
            if (colors <= k) take_lower(rep, n + 1, std::string("construction:") + name);
        for (int n = 3; n <= 1024; ++n)
            if (recursive_triangle_color_count(n) <= k)
                take_lower(rep, n + 1, "construction:recursive_triangle");
    }
    if (is_k4 && r == 3) {
        if (2 <= k) take_lower(rep, 6, "construction:K5_3_BK4_2COL");
        for (int n = 4; n <= 256; ++n)
            if (tripartite_cover_color_count(n) <= k)
                take_lower(rep, n + 1, "construction:tripartite_cover");
    }
    settle_exact(rep);
    return rep;
}

bool triple_forms_berge_k3(Mask a, Mask b, Mask c) {
    // Hall's condition for an SDR of the three pairwise intersections
    Mask ab = a & b, ac = a & c, bc = b & c;
    if (!ab || !ac || !bc) return false;
    if (popcount(ab | ac) < 2 || popcount(ab | bc) < 2 || popcount(ac | bc) < 2)
        return false;
    return popcount(ab | ac | bc) >= 3;
}

bool threshold_triples_all_berge_k3(int n) {
    if (n < 3 || n % 2 == 0 || n > 11)
        throw std::invalid_argument(
            "threshold_triples_all_berge_k3: need odd 3 <= n <= 11");
    std::vector<Mask> sets;
    int s = (n + 1) / 2;
    for (Mask m = 0; m <= full_mask(n); ++m)
        if (popcount(m) >= s) sets.push_back(m);
    std::size_t cnt = sets.size();
    for (std::size_t i = 0; i < cnt; ++i)
        for (std::size_t j = i + 1; j < cnt; ++j)
            for (std::size_t l = j + 1; l < cnt; ++l)
                if (!triple_forms_berge_k3(sets[i], sets[j], sets[l]))
                    return false;
    return true;
}

namespace {

// Smallest k admitting a good coloring, by increasing-k search. Host is
// either K_n^r or an explicit set system.
std::optional<long long> minimal_good_colors(const Hypergraph& host,
                                             const Graph& pattern, int kmax) {
    for (int k = 1; k <= kmax; ++k) {
        auto res = exists_good_coloring(host, k, {pattern});
        if (res.status == SearchStatus::Sat) return k;
        if (res.status == SearchStatus::Unknown) return std::nullopt;
    }
    return std::nullopt;
}

Hypergraph sets_of_size_at_least(int n, int s) {
    std::vector<Mask> edges;
    for (Mask m = 0; m <= full_mask(n); ++m)
        if (popcount(m) >= s) edges.push_back(m);
    return hypergraph_from_edges(n, std::move(edges), true);
}

} // namespace

BoundReport dual_f_report(int n, const Graph& pattern, FMode mode, int r) {
    if (pattern.edges.size() < 2)
        throw std::invalid_argument("dual_f_report: pattern needs >= 2 edges");
    BoundReport rep;
    Graph k3 = *builtin_pattern("k3");
    Graph k4 = *builtin_pattern("k4");
    Graph tkk = *builtin_pattern("2k2");
    bool is_k3 = isomorphic(pattern, k3);
    bool is_2k2 = isomorphic(pattern, tkk);

    if (mode == FMode::Uniform) {
        if (r != 3)
            throw std::invalid_argument("dual_f_report: uniform mode covers r=3");
        if (n < 3 || n > 1024)
            throw std::invalid_argument("dual_f_report: n out of range");
        if (is_k3)
            take_upper(rep, recursive_triangle_color_count(n),
                       "construction:recursive_triangle");
        else if (isomorphic(pattern, k4) && n >= 4)
            take_upper(rep, tripartite_cover_color_count(n),
                       "construction:tripartite_cover");
        if (n <= 5) {
            int kmax = rep.upper ? static_cast<int>(*rep.upper) : 8;
            if (auto f = minimal_good_colors(complete_hypergraph(n, 3), pattern,
                                             kmax)) {
                take_lower(rep, *f, "search");
                take_upper(rep, *f, "search");
            }
        }
        settle_exact(rep);
        return rep;
    }

    if (n < 2 || n > 20)
        throw std::invalid_argument("dual_f_report: n out of range");

    // upper bounds from the powerset constructions
    if (is_k3 && n >= 3 && n <= 16)
        take_upper(rep, pow2ll(n - 2), "construction:quad_class");
    else if (is_2k2 && n >= 3 && n <= 16)
        take_upper(rep,
                   pow2ll(n) - static_cast<long long>(n) * (n - 1) / 2 - n - 1,
                   "construction:two_k2");
    else if (!is_2k2)
        take_upper(rep, pow2ll(n - 1), "construction:pair_complement");

    // general lower bound: all supersets of a |V(G)|-set pack at most
    // |E(G)|-1 per color
    if (n >= pattern.n)
        take_lower(rep,
                   std::max(1LL, ceil_div_ll(pow2ll(n - pattern.n),
                                             static_cast<long long>(
                                                 pattern.edges.size()) -
                                                 1)),
                   "formula");

    if (is_k3 && n % 2 == 1 && n != 5 && n >= 3 && n <= 11 &&
        threshold_triples_all_berge_k3(n)) {
        // at most two sets of size >= (n+1)/2 can share a color
        take_lower(rep, pow2ll(n - 2), "counting:threshold");
    }

    if (is_2k2 && n >= 4 && n <= 4) {
        // exact at tiny n: only the sets of size >= 2 matter
        Hypergraph relevant = sets_of_size_at_least(n, 2);
        long long constructed =
            pow2ll(n) - static_cast<long long>(n) * (n - 1) / 2 - n - 1;
        auto res = exists_good_coloring(relevant, static_cast<int>(constructed) - 1,
                                        {pattern});
        if (res.status == SearchStatus::Unsat)
            take_lower(rep, constructed, "search");
    }
    if (is_2k2 && n == 3) take_lower(rep, 1, "formula");

    settle_exact(rep);
    return rep;
}

} // namespace berge
