#include "berge/turan.hpp"

#include <stdexcept>

#include "berge/detect.hpp"

namespace berge {

namespace {

struct TuranSearch {
    const std::vector<Mask>& candidates;
    int n;
    int r;
    const Graph& pattern;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool truncated = false;

    std::vector<Mask> current;
    std::vector<Mask> best;

    // Every nonempty Berge-G-free family has an isomorphic copy whose
    // lexicographically least edge is candidates[0], so inclusion branches
    // before the first pick are restricted to it.
    void rec(std::size_t i) {
        if (truncated) return;
        if (++nodes > budget) {
            truncated = true;
            return;
        }
        if (current.size() + (candidates.size() - i) <= best.size()) return;
        if (i == candidates.size()) {
            best = current;
            return;
        }
        bool may_include = !current.empty() || i == 0;
        if (may_include) {
            current.push_back(candidates[i]);
            Hypergraph h;
            h.n = n;
            h.uniformity = r;
            h.edges = current;
            if (!find_berge_using(h, pattern, static_cast<int>(current.size()) - 1))
                rec(i + 1);
            current.pop_back();
        }
        rec(i + 1);
    }
};

} // namespace

TuranResult turan_exact(int n, int r, const Graph& pattern,
                        std::uint64_t node_budget) {
    if (n < 1 || r < 1 || r > n)
        throw std::invalid_argument("turan_exact: need 1 <= r <= n");
    if (pattern.edges.empty())
        throw std::invalid_argument("turan_exact: pattern needs at least one edge");
    Hypergraph host = complete_hypergraph(n, r);
    bool within_caps = n <= 8 && pattern.edges.size() <= 6;
    TuranSearch s{host.edges, n, r, pattern, node_budget, 0, false, {}, {}};
    s.rec(0);
    TuranResult out;
    out.n = n;
    out.r = r;
    out.value = static_cast<long long>(s.best.size());
    out.witness = hypergraph_from_edges(n, s.best);
    out.witness.uniformity = r;
    out.exhausted = within_caps && !s.truncated;
    out.nodes = s.nodes;
    return out;
}

Rational gyori_bound(long long n, int r) {
    if (r < 3) throw std::invalid_argument("gyori_bound: need r >= 3");
    return Rational(BigInt(n) * n, BigInt(8) * (r - 2));
}

} // namespace berge
