#include "berge/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace berge {

namespace {

// Minimum of the sorted edge-mask list over all vertex permutations,
// found by placing vertices into positions 0,1,2,... one at a time.
// An edge's final mask has its top bit at the position of its last-placed
// vertex, so edges completed at later depths have strictly larger masks:
// the sorted code grows by appending, which makes prefix pruning sound.
struct CanonSearch {
    int n;
    const std::vector<Mask>& edges;
    std::vector<int> degree;          // in how many edges each vertex lies
    std::vector<Mask> best;           // best complete code found so far
    bool have_best = false;

    std::vector<int> pos;             // vertex -> assigned position (-1 unset)
    std::vector<Mask> partial;        // per edge: image bits of placed vertices
    std::vector<int> remaining;       // per edge: #vertices not yet placed
    std::vector<Mask> prefix;         // finished masks, ascending

    explicit CanonSearch(int n_, const std::vector<Mask>& es)
        : n(n_), edges(es), degree(n_, 0), pos(n_, -1),
          partial(es.size(), 0), remaining(es.size(), 0) {
        for (std::size_t i = 0; i < es.size(); ++i) {
            remaining[i] = popcount(es[i]);
            for (int v : mask_vertices(es[i])) degree[v]++;
        }
    }

    // prefix stays lexicographically comparable against the current best:
    // best has full length, prefix never exceeds it
    bool prefix_beaten() const {
        if (!have_best) return false;
        auto [p, b] = std::mismatch(prefix.begin(), prefix.end(), best.begin());
        return p != prefix.end() && *p > *b;
    }

    void place(int depth) {
        if (depth == n) {
            if (!have_best || prefix < best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        std::vector<int> cands;
        for (int v = 0; v < n; ++v)
            if (pos[v] < 0) cands.push_back(v);
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            if (degree[a] != degree[b]) return degree[a] > degree[b];
            return a < b;
        });
        for (int v : cands) {
            pos[v] = depth;
            std::vector<Mask> finished;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if ((edges[i] >> v) & 1) {
                    partial[i] |= vbit(depth);
                    if (--remaining[i] == 0) finished.push_back(partial[i]);
                }
            }
            std::sort(finished.begin(), finished.end());
            std::size_t base = prefix.size();
            prefix.insert(prefix.end(), finished.begin(), finished.end());
            if (!prefix_beaten()) place(depth + 1);
            prefix.resize(base);
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if ((edges[i] >> v) & 1) {
                    partial[i] &= ~vbit(depth);
                    ++remaining[i];
                }
            }
            pos[v] = -1;
        }
    }

    std::vector<Mask> run() {
        if (edges.empty()) return {};
        place(0);
        return best;
    }
};

CanonicalCode encode(int n, const std::vector<Mask>& canon_edges) {
    CanonicalCode code;
    code.n = n;
    for (Mask e : canon_edges) code.edge_sizes.push_back(popcount(e));
    std::sort(code.edge_sizes.begin(), code.edge_sizes.end());
    std::string& b = code.bytes;
    b.push_back(static_cast<char>(n));
    b.push_back(static_cast<char>(canon_edges.size()));
    for (Mask e : canon_edges) {
        b.push_back(static_cast<char>((e >> 8) & 0xff));
        b.push_back(static_cast<char>(e & 0xff));
    }
    return code;
}

CanonicalCode canonical_of(int n, const std::vector<Mask>& edges) {
    if (n > 12)
        throw std::invalid_argument("canonical_code: supported only for n <= 12");
    CanonSearch s(n, edges);
    return encode(n, s.run());
}

} // namespace

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

CanonicalCode canonical_code(const Hypergraph& h) {
    return canonical_of(h.n, h.edges);
}

CanonicalCode canonical_code(const Graph& g) {
    std::vector<Mask> edges;
    edges.reserve(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        edges.push_back(g.edge_mask(static_cast<int>(i)));
    return canonical_of(g.n, edges);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    return canonical_code(a) == canonical_code(b);
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
    if (g.n > 12)
        throw std::invalid_argument("automorphisms: supported only for n <= 12");
    std::vector<std::vector<int>> out;
    std::vector<int> perm(g.n, -1);
    std::vector<char> used(g.n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.n) {
            out.push_back(perm);
            return;
        }
        for (int w = 0; w < g.n; ++w) {
            if (used[w] || g.degree(w) != g.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != g.has_edge(perm[u], w)) ok = false;
            if (!ok) continue;
            perm[v] = w;
            used[w] = 1;
            self(self, v + 1);
            used[w] = 0;
            perm[v] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace berge
