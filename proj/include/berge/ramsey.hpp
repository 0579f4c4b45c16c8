#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "berge/rational.hpp"
#include "berge/types.hpp"

namespace berge {

enum class SearchStatus { Sat, Unsat, Unknown };

struct ColoringSearchResult {
    SearchStatus status = SearchStatus::Unknown;
    std::optional<EdgeColoring> coloring; // present iff Sat
    std::uint64_t nodes = 0;
};

struct SearchOptions {
    std::uint64_t node_budget = 2'000'000'000;
    int threads = 1;
    // Test hook: observes every incremental containment check
    // (color class including the new edge, pattern, hit).
    std::function<void(const Hypergraph&, const Graph&, bool)> prune_audit;
};

/// Is there a k-coloring of the host's edges with no monochromatic
/// Berge-copy of any pattern? Backtracking over edges in host order with
/// least-index-first color symmetry breaking; Unsat answers are exhaustive.
/// 2-uniform hosts use direct subgraph containment.
ColoringSearchResult exists_good_coloring(const Hypergraph& host, int k,
                                          const std::vector<Graph>& patterns,
                                          const SearchOptions& opts = {});
ColoringSearchResult exists_good_coloring(int n, int r, int k, const Graph& pattern,
                                          const SearchOptions& opts = {});

/// Smallest n with C(n,r) > k * turan_upper(n), by exact rational comparison.
int counting_upper_bound(int k, int r,
                         const std::function<Rational(long long)>& turan_upper);

/// R_r(Berge-G, k) <= R(G*(v), k) + r - 2.
int shadow_upper_bound(int graph_ramsey_value, int r);

/// 4k|V(G)| + r - 2 when some vertex removal makes G acyclic.
std::optional<long long> acyclic_upper_bound(const Graph& g, int k, int r);

/// (1+eps)^k * eps^-1 * k!  for 0 < eps < 1/4, exact.
Rational kstar_bound(int k, const Rational& eps);

struct KstarOptimum {
    Rational eps;
    Rational value;
};

/// Minimum of kstar_bound over the grid eps = i/1000, i = 1..249.
KstarOptimum kstar_bound_opt(int k);

struct BoundReport {
    std::optional<long long> lower;
    std::optional<long long> upper;
    std::optional<long long> exact;
    std::vector<std::string> provenance;
};

/// Construction/counting/formula bounds on R_r(Berge-G, k).
BoundReport ramsey_bounds(const Graph& pattern, int k, int r);

enum class FMode { NonUniform, Uniform };

/// Bounds on the dual functions f(n, Berge-G) (colors needed to avoid a
/// monochromatic copy on 2^[n], or on K_n^r for Uniform mode).
BoundReport dual_f_report(int n, const Graph& pattern, FMode mode, int r = 3);

/// Exhaustively checks that every three sets of size >= (n+1)/2 in [n]
/// form a Berge-K3 (via Hall's condition on their pairwise intersections).
bool threshold_triples_all_berge_k3(int n);

/// Hall's condition for three hyperedges to form a Berge-K3.
bool triple_forms_berge_k3(Mask a, Mask b, Mask c);

} // namespace berge
