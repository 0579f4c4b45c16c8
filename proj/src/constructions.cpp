#include "berge/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace berge {

namespace {

int chi_prime_complete(int m) {
    if (m < 2) return 0;
    return (m % 2 == 0) ? m - 1 : m;
}

long long ipow2(int e) { return 1LL << e; }

int edge_index(const Hypergraph& host, Mask e) {
    auto it = std::lower_bound(host.edges.begin(), host.edges.end(), e);
    if (it == host.edges.end() || *it != e)
        throw std::logic_error("construction refers to a non-host edge");
    return static_cast<int>(it - host.edges.begin());
}

ConstructionOutput with_counts(ConstructionOutput out) {
    if (out.coloring) out.used_colors = out.coloring->used_colors();
    return out;
}

} // namespace

std::vector<std::vector<std::pair<int, int>>> proper_edge_coloring_classes(int m) {
    std::vector<std::vector<std::pair<int, int>>> classes;
    if (m < 2) return classes;
    if (m % 2 == 0) {
        // round-robin rotation: vertex m-1 fixed, others rotate
        int r = m - 1;
        for (int i = 0; i < r; ++i) {
            std::vector<std::pair<int, int>> cls;
            cls.emplace_back(i, m - 1);
            for (int j = 1; j <= m / 2 - 1; ++j) {
                int a = (i - j + r) % r, b = (i + j) % r;
                cls.emplace_back(std::min(a, b), std::max(a, b));
            }
            classes.push_back(std::move(cls));
        }
    } else {
        for (int i = 0; i < m; ++i) {
            std::vector<std::pair<int, int>> cls;
            for (int j = 1; j <= (m - 1) / 2; ++j) {
                int a = (i - j + m) % m, b = (i + j) % m;
                cls.emplace_back(std::min(a, b), std::max(a, b));
            }
            classes.push_back(std::move(cls));
        }
    }
    return classes;
}

int msb_pair_color(int x, int y) {
    if (x == y) throw std::invalid_argument("msb_pair_color: x == y");
    return std::bit_width(static_cast<unsigned>(x ^ y)) - 1;
}

ConstructionOutput pair_complement_coloring(int n) {
    if (n < 2 || n > 20)
        throw std::invalid_argument("pair_complement_coloring: need 2 <= n <= 20");
    ConstructionOutput out;
    out.family_tag = "pair_complement";
    out.n = n;
    out.declared_colors = ipow2(n - 1);
    out.host = powerset_hypergraph(n);
    EdgeColoring c;
    c.k = static_cast<int>(out.declared_colors);
    c.color.resize(std::size_t{1} << n);
    Mask full = full_mask(n);
    for (Mask m = 0; m <= full; ++m) {
        // the class representative is whichever of {A, [n]\A} lacks vertex n-1
        Mask rep = ((m >> (n - 1)) & 1) ? (full ^ m) : m;
        c.color[m] = static_cast<int>(rep);
    }
    out.coloring = std::move(c);
    return with_counts(std::move(out));
}

ConstructionOutput quad_class_coloring(int n) {
    if (n < 3 || n > 16)
        throw std::invalid_argument("quad_class_coloring: need 3 <= n <= 16");
    ConstructionOutput out;
    out.family_tag = "quad_class";
    out.n = n;
    out.declared_colors = ipow2(n - 2);
    out.host = powerset_hypergraph(n);
    EdgeColoring c;
    c.k = static_cast<int>(out.declared_colors);
    c.color.resize(std::size_t{1} << n);
    Mask top = vbit(n - 1);
    Mask m1 = full_mask(n - 1);
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        // class of A: {A, [n-1]\A, [n]\A, A+{n-1}}; the classes of A and
        // [n-1]\A coincide, so the smaller of the two names the class
        Mask b = m & ~top;
        c.color[m] = static_cast<int>(std::min(b, m1 ^ b));
    }
    out.coloring = std::move(c);
    return with_counts(std::move(out));
}

ConstructionOutput two_k2_coloring(int n) {
    if (n < 3 || n > 16)
        throw std::invalid_argument("two_k2_coloring: need 3 <= n <= 16");
    ConstructionOutput out;
    out.family_tag = "two_k2";
    out.n = n;
    out.declared_colors =
        ipow2(n) - (static_cast<long long>(n) * (n - 1)) / 2 - n - 1;
    out.host = powerset_hypergraph(n);

    std::size_t total = std::size_t{1} << n;
    std::vector<int> rank(total, -1);
    int next = 0;
    for (Mask m = 0; m < total; ++m)
        if (popcount(m) >= 3) rank[m] = next++;

    EdgeColoring c;
    c.k = next;
    c.color.resize(total);
    for (Mask m = 0; m < total; ++m) {
        if (popcount(m) >= 3) {
            c.color[m] = rank[m];
            continue;
        }
        Mask t = m;
        for (int v = 0; popcount(t) < 3; ++v)
            if (!((t >> v) & 1)) t |= vbit(v); // lexicographically least 3-superset
        c.color[m] = rank[t];
    }
    out.coloring = std::move(c);
    return with_counts(std::move(out));
}

namespace {

struct TriangleRec {
    Hypergraph* host = nullptr;
    std::vector<int>* color = nullptr;

    void paint(Mask e, int col) { (*color)[edge_index(*host, e)] = col; }

    // Colors every triple inside `verts`; returns how many colors the subtree
    // consumed starting at `base`. Both halves recurse into the same fresh
    // pool, so sibling subtrees share color indices.
    long long run(const std::vector<int>& verts, long long base) {
        int m = static_cast<int>(verts.size());
        if (m < 3) return 0;
        int half = (m + 1) / 2;
        std::vector<int> a(verts.begin(), verts.begin() + half);
        std::vector<int> b(verts.begin() + half, verts.end());
        auto cls_a = proper_edge_coloring_classes(static_cast<int>(a.size()));
        auto cls_b = proper_edge_coloring_classes(static_cast<int>(b.size()));
        if (host) {
            for (std::size_t i = 0; i < cls_a.size(); ++i)
                for (auto [x, y] : cls_a[i])
                    for (int z : b)
                        paint(vbit(a[x]) | vbit(a[y]) | vbit(z),
                              static_cast<int>(base + i));
            for (std::size_t i = 0; i < cls_b.size(); ++i)
                for (auto [x, y] : cls_b[i])
                    for (int z : a)
                        paint(vbit(b[x]) | vbit(b[y]) | vbit(z),
                              static_cast<int>(base + cls_a.size() + i));
        }
        long long level = static_cast<long long>(cls_a.size() + cls_b.size());
        long long fa = run(a, base + level);
        long long fb = run(b, base + level);
        return level + std::max(fa, fb);
    }
};

} // namespace

long long recursive_triangle_color_count(long long n) {
    if (n < 3) return 0;
    long long a = (n + 1) / 2, b = n / 2;
    return chi_prime_complete(static_cast<int>(a)) +
           chi_prime_complete(static_cast<int>(b)) +
           recursive_triangle_color_count(a);
}

ConstructionOutput recursive_triangle_coloring(int n) {
    if (n < 3 || n > 1024)
        throw std::invalid_argument(
            "recursive_triangle_coloring: need 3 <= n <= 1024");
    ConstructionOutput out;
    out.family_tag = "recursive_triangle";
    out.n = n;
    out.declared_colors = recursive_triangle_color_count(n);
    if (n > 24) {
        out.used_colors = out.declared_colors;
        return out;
    }
    out.host = complete_hypergraph(n, 3);
    std::vector<int> color(out.host->edges.size(), -1);
    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    TriangleRec rec;
    rec.host = &*out.host;
    rec.color = &color;
    long long used = rec.run(verts, 0);
    if (used != out.declared_colors)
        throw std::logic_error("recursive_triangle_coloring: count mismatch");
    EdgeColoring c;
    c.k = static_cast<int>(out.declared_colors);
    c.color = std::move(color);
    out.coloring = std::move(c);
    return with_counts(std::move(out));
}

namespace {

struct TripartiteRec {
    Hypergraph* host = nullptr;
    std::vector<int>* color = nullptr;
    std::vector<std::array<Mask, 3>>* parts = nullptr;

    void tag_parts(long long col, Mask p0, Mask p1, Mask p2) {
        auto& t = (*parts)[col];
        t[0] |= p0;
        t[1] |= p1;
        t[2] |= p2;
    }

    long long run(const std::vector<int>& verts, long long base) {
        int m = static_cast<int>(verts.size());
        if (m < 3) return 0;
        int half = (m + 1) / 2;
        std::vector<int> a(verts.begin(), verts.begin() + half);
        std::vector<int> b(verts.begin() + half, verts.end());
        int ca = a.size() >= 2 ? std::bit_width(a.size() - 1) : 0;
        int cb = b.size() >= 2 ? std::bit_width(b.size() - 1) : 0;
        if (host) {
            Mask amask = 0, bmask = 0;
            for (int v : a) amask |= vbit(v);
            for (int v : b) bmask |= vbit(v);
            for (int bitpos = 0; bitpos < ca; ++bitpos) {
                Mask lo = 0, hi = 0;
                for (std::size_t i = 0; i < a.size(); ++i)
                    ((i >> bitpos) & 1 ? hi : lo) |= vbit(a[i]);
                tag_parts(base + bitpos, lo, hi, bmask);
            }
            for (int bitpos = 0; bitpos < cb; ++bitpos) {
                Mask lo = 0, hi = 0;
                for (std::size_t i = 0; i < b.size(); ++i)
                    ((i >> bitpos) & 1 ? hi : lo) |= vbit(b[i]);
                tag_parts(base + ca + bitpos, lo, hi, amask);
            }
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = i + 1; j < a.size(); ++j) {
                    int col = static_cast<int>(base + msb_pair_color(static_cast<int>(i),
                                                                     static_cast<int>(j)));
                    for (int z : b)
                        (*color)[edge_index(*host,
                                            vbit(a[i]) | vbit(a[j]) | vbit(z))] = col;
                }
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j) {
                    int col = static_cast<int>(
                        base + ca +
                        msb_pair_color(static_cast<int>(i), static_cast<int>(j)));
                    for (int z : a)
                        (*color)[edge_index(*host,
                                            vbit(b[i]) | vbit(b[j]) | vbit(z))] = col;
                }
        }
        long long level = ca + cb;
        long long fa = run(a, base + level);
        long long fb = run(b, base + level);
        return level + std::max(fa, fb);
    }
};

} // namespace

long long tripartite_cover_color_count(long long n) {
    if (n < 3) return 0;
    long long a = (n + 1) / 2, b = n / 2;
    int ca = a >= 2 ? std::bit_width(static_cast<unsigned long long>(a - 1)) : 0;
    int cb = b >= 2 ? std::bit_width(static_cast<unsigned long long>(b - 1)) : 0;
    return ca + cb + tripartite_cover_color_count(a);
}

ConstructionOutput tripartite_cover_coloring(int n) {
    if (n < 4 || n > 256)
        throw std::invalid_argument("tripartite_cover_coloring: need 4 <= n <= 256");
    ConstructionOutput out;
    out.family_tag = "tripartite_cover";
    out.n = n;
    out.declared_colors = tripartite_cover_color_count(n);
    if (n > 64) {
        out.used_colors = out.declared_colors;
        return out;
    }
    out.host = complete_hypergraph(n, 3);
    std::vector<int> color(out.host->edges.size(), -1);
    out.parts.assign(out.declared_colors, {0, 0, 0});
    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    TripartiteRec rec;
    rec.host = &*out.host;
    rec.color = &color;
    rec.parts = &out.parts;
    long long used = rec.run(verts, 0);
    if (used != out.declared_colors)
        throw std::logic_error("tripartite_cover_coloring: count mismatch");
    EdgeColoring c;
    c.k = static_cast<int>(out.declared_colors);
    c.color = std::move(color);
    out.coloring = std::move(c);
    return with_counts(std::move(out));
}

namespace {

Mask triple(int a, int b, int c) { return vbit(a) | vbit(b) | vbit(c); }

// rotate labels 0..4, keep any "infinity" vertices (>= 5) fixed
Mask rotate5(Mask e, int times) {
    Mask out = 0;
    for (int v : mask_vertices(e)) out |= vbit(v < 5 ? (v + times) % 5 : v);
    return out;
}

ConstructionOutput make_fixed(const std::string& tag, Hypergraph host,
                              const std::vector<std::vector<Mask>>& classes) {
    ConstructionOutput out;
    out.family_tag = tag;
    out.n = host.n;
    out.declared_colors = static_cast<long long>(classes.size());
    EdgeColoring c;
    c.k = static_cast<int>(classes.size());
    c.color.assign(host.edges.size(), -1);
    for (std::size_t col = 0; col < classes.size(); ++col)
        for (Mask e : classes[col]) {
            int idx = edge_index(host, e);
            if (c.color[idx] != -1)
                throw std::logic_error(tag + ": edge colored twice, not a partition");
            c.color[idx] = static_cast<int>(col);
        }
    for (int x : c.color)
        if (x < 0) throw std::logic_error(tag + ": uncolored edge, not a partition");
    out.host = std::move(host);
    out.coloring = std::move(c);
    return with_counts(std::move(out));
}

} // namespace

std::vector<std::string> fixed_coloring_names() {
    return {"K4_3_2COL", "K5_3_4COL",     "K6_3_5COL",
            "K7_3_6COL", "K5_3_BK4_2COL", "K6_GRAPH_K33"};
}

ConstructionOutput fixed_coloring(std::string_view name) {
    if (name == "K4_3_2COL") {
        Hypergraph host = complete_hypergraph(4, 3);
        return make_fixed(
            "K4_3_2COL", host,
            {{host.edges[0], host.edges[1]}, {host.edges[2], host.edges[3]}});
    }
    if (name == "K5_3_4COL") {
        // classes 123,124,125 | 134,234,345 | 135,145 | 235,245 on [5] -> 0..4
        return make_fixed("K5_3_4COL", complete_hypergraph(5, 3),
                          {{triple(0, 1, 2), triple(0, 1, 3), triple(0, 1, 4)},
                           {triple(0, 2, 3), triple(1, 2, 3), triple(2, 3, 4)},
                           {triple(0, 2, 4), triple(0, 3, 4)},
                           {triple(1, 2, 4), triple(1, 3, 4)}});
    }
    if (name == "K6_3_5COL") {
        // [5] -> 0..4, infinity -> 5; remaining classes are cyclic shifts
        std::vector<Mask> first = {triple(5, 0, 1), triple(5, 0, 2),
                                   triple(2, 3, 4), triple(1, 3, 4)};
        std::vector<std::vector<Mask>> classes;
        for (int j = 0; j < 5; ++j) {
            std::vector<Mask> cls;
            for (Mask e : first) cls.push_back(rotate5(e, j));
            classes.push_back(std::move(cls));
        }
        return make_fixed("K6_3_5COL", complete_hypergraph(6, 3), classes);
    }
    if (name == "K7_3_6COL") {
        // [5] -> 0..4, infinity_1 -> 5, infinity_2 -> 6
        std::vector<std::vector<Mask>> classes;
        std::vector<Mask> star;
        for (int i = 0; i < 5; ++i) star.push_back(triple(5, 6, i));
        classes.push_back(std::move(star));
        std::vector<Mask> second = {triple(0, 1, 4), triple(0, 2, 3),
                                    triple(5, 1, 4), triple(6, 1, 4),
                                    triple(5, 2, 3), triple(6, 2, 3)};
        for (int j = 0; j < 5; ++j) {
            std::vector<Mask> cls;
            for (Mask e : second) cls.push_back(rotate5(e, j));
            classes.push_back(std::move(cls));
        }
        return make_fixed("K7_3_6COL", complete_hypergraph(7, 3), classes);
    }
    if (name == "K5_3_BK4_2COL") {
        // any balanced split avoids Berge-K4; fix the lexicographic one
        Hypergraph host = complete_hypergraph(5, 3);
        std::vector<std::vector<Mask>> classes(2);
        for (std::size_t i = 0; i < host.edges.size(); ++i)
            classes[i < 5 ? 0 : 1].push_back(host.edges[i]);
        return make_fixed("K5_3_BK4_2COL", host, classes);
    }
    if (name == "K6_GRAPH_K33") {
        // K_{3,3} between {0,1,2} and {3,4,5} vs its complement, on K_6
        std::vector<Mask> pairs;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v) pairs.push_back(vbit(u) | vbit(v));
        std::sort(pairs.begin(), pairs.end());
        Hypergraph host = hypergraph_from_edges(6, pairs);
        std::vector<std::vector<Mask>> classes(2);
        for (Mask e : pairs) {
            bool cross = (e & 0b000111) && (e & 0b111000);
            classes[cross ? 0 : 1].push_back(e);
        }
        return make_fixed("K6_GRAPH_K33", host, classes);
    }
    throw std::invalid_argument("fixed_coloring: unknown name '" +
                                std::string(name) + "'");
}

Hypergraph threshold_family(int n, int s) {
    if (n < 1 || n > 20 || s < 1 || s > n)
        throw std::invalid_argument("threshold_family: need 1 <= s <= n <= 20");
    std::vector<Mask> edges;
    for (Mask m = 0; m <= full_mask(n); ++m)
        if (popcount(m) >= s) edges.push_back(m);
    return hypergraph_from_edges(n, std::move(edges));
}

} // namespace berge
