// Acceptance suite: runs every promised result end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "berge/canonical.hpp"
#include "berge/constructions.hpp"
#include "berge/detect.hpp"
#include "berge/gstar.hpp"
#include "berge/patterns.hpp"
#include "berge/ramsey.hpp"
#include "berge/turan.hpp"
#include "berge/types.hpp"

using namespace berge;

namespace {

struct Criterion {
    int id;
    std::string description;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

// ---------------------------------------------------------------------- 1 --

bool criterion_detector_soundness(std::string& detail) {
    std::mt19937_64 rng(20260809);
    std::vector<Graph> pats = {*builtin_pattern("k3"), *builtin_pattern("k4"),
                               *builtin_pattern("c4"), *builtin_pattern("p4"),
                               *builtin_pattern("2k2")};
    bool ok = true;
    int agreements = 0;
    for (int it = 0; it < 200; ++it) {
        int n = 4 + static_cast<int>(rng() % 4); // n <= 7
        int edges = 3 + static_cast<int>(rng() % 6); // |E(H)| <= 8
        std::vector<Mask> es;
        int guard = 0;
        while (static_cast<int>(es.size()) < edges && ++guard < 4000) {
            int size = 2 + static_cast<int>(rng() % 3);
            size = std::min(size, n);
            Mask e = 0;
            while (popcount(e) < size) e |= vbit(static_cast<int>(rng() % n));
            if (std::find(es.begin(), es.end(), e) == es.end()) es.push_back(e);
        }
        auto host = hypergraph_from_edges(n, es);
        const Graph& g = pats[it % pats.size()];
        auto fast = find_berge(host, g);
        auto slow = find_berge_oracle(host, g);
        ok &= expect(fast.has_value() == slow.has_value(),
                     "detector disagrees with oracle", detail);
        if (fast)
            ok &= expect(verify_witness(host, g, *fast).ok &&
                             verify_witness(host, g, *slow).ok,
                         "witness failed verification", detail);
        ++agreements;
    }
    ok &= expect(agreements == 200, "fewer than 200 instances", detail);
    return ok;
}

// ---------------------------------------------------------------------- 2 --

bool criterion_turan_exactness(std::string& detail) {
    bool ok = true;
    auto k4 = *builtin_pattern("k4");
    auto k3 = *builtin_pattern("k3");

    auto res54 = turan_exact(5, 3, k4);
    ok &= expect(res54.value == 5 && res54.exhausted, "ex_3(5,K4) != 5", detail);
    ok &= expect(!find_berge(res54.witness, k4).has_value(),
                 "ex_3(5,K4) witness not Berge-K4-free", detail);

    // independent oracle: enumerate every subset of the 4 edges of K_4^3
    auto host4 = complete_hypergraph(4, 3);
    long long brute = 0;
    for (unsigned s = 0; s < 16; ++s) {
        std::vector<Mask> es;
        for (int i = 0; i < 4; ++i)
            if ((s >> i) & 1) es.push_back(host4.edges[i]);
        bool free = es.size() < 3 ||
                    !find_berge_oracle(hypergraph_from_edges(4, es), k3).has_value();
        if (free) brute = std::max(brute, static_cast<long long>(es.size()));
    }
    ok &= expect(brute == 2, "subset oracle disagrees", detail);
    auto res43 = turan_exact(4, 3, k3);
    ok &= expect(res43.value == 2 && res43.exhausted, "ex_3(4,K3) != 2", detail);

    for (int n = 4; n <= 7; ++n) {
        auto res = turan_exact(n, 3, k3);
        ok &= expect(res.exhausted, "search not exhaustive", detail);
        ok &= expect(BigInt(res.value) <= floor_div(gyori_bound(n, 3)),
                     "ex_3(n,K3) exceeds n^2/8", detail);
    }
    return ok;
}

// ---------------------------------------------------------------------- 3 --

bool criterion_counting_bounds(std::string& detail) {
    auto gy = [](long long n) { return gyori_bound(n, 3); };
    bool ok = true;
    const std::vector<std::pair<int, int>> table = {{2, 5}, {3, 5}, {4, 6},
                                                    {5, 7}, {6, 8}, {8, 9}};
    for (auto [k, expect_n] : table)
        ok &= expect(counting_upper_bound(k, 3, gy) == expect_n,
                     "wrong value at k=" + std::to_string(k), detail);
    // k=7 boundary: C(8,3) = 56 = 7*8^2/8 exactly, so 8 must not qualify
    ok &= expect(Rational(binomial(8, 3)) == Rational(7) * gy(8),
                 "boundary identity broken", detail);
    ok &= expect(counting_upper_bound(7, 3, gy) == 9, "k=7 must give 9", detail);
    return ok;
}

// ---------------------------------------------------------------------- 4 --

bool criterion_constructions(std::string& detail) {
    bool ok = true;
    auto k3 = *builtin_pattern("k3");
    auto k4 = *builtin_pattern("k4");

    for (const char* name : {"K5_3_4COL", "K6_3_5COL", "K7_3_6COL", "K4_3_2COL"}) {
        auto out = fixed_coloring(name); // partition validated on construction
        ok &= expect(coloring_valid(*out.host, *out.coloring),
                     std::string(name) + " not a partition", detail);
        ok &= expect(
            !mono_berge_in_coloring(*out.host, *out.coloring, k3).has_value(),
            std::string(name) + " has a mono Berge-K3", detail);
    }
    auto bk4 = fixed_coloring("K5_3_BK4_2COL");
    ok &= expect(!mono_berge_in_coloring(*bk4.host, *bk4.coloring, k4).has_value(),
                 "K5_3_BK4_2COL has a mono Berge-K4", detail);

    auto k33 = fixed_coloring("K6_GRAPH_K33");
    for (const auto& member : gstar_family(k4, 0))
        ok &= expect(
            !mono_berge_in_coloring(*k33.host, *k33.coloring, member).has_value(),
            "K6_GRAPH_K33 contains a mono family member", detail);
    return ok;
}

// ---------------------------------------------------------------------- 5 --

bool criterion_exhaustive_values(std::string& detail) {
    bool ok = true;
    auto k3 = *builtin_pattern("k3");
    auto k4 = *builtin_pattern("k4");
    auto family = gstar_family(k4, 0);

    auto unsat = [&](const Hypergraph& host, int k, const std::vector<Graph>& pats,
                     const char* what) {
        auto res = exists_good_coloring(host, k, pats);
        ok &= expect(res.status == SearchStatus::Unsat,
                     std::string(what) + " not UNSAT", detail);
    };
    auto sat = [&](const Hypergraph& host, int k, const std::vector<Graph>& pats,
                   const char* what) {
        auto res = exists_good_coloring(host, k, pats);
        ok &= expect(res.status == SearchStatus::Sat,
                     std::string(what) + " not SAT", detail);
        if (res.coloring)
            for (const auto& g : pats)
                ok &= expect(
                    !mono_berge_in_coloring(host, *res.coloring, g).has_value(),
                    std::string(what) + " SAT coloring not verified", detail);
    };

    unsat(complete_hypergraph(5, 3), 2, {k3}, "(5,3,2,K3)");
    unsat(complete_hypergraph(5, 3), 3, {k3}, "(5,3,3,K3)");
    unsat(complete_hypergraph(6, 3), 2, {k4}, "(6,3,2,K4)");
    unsat(complete_hypergraph(7, 2), 2, family, "(7,2,2,K4*)");
    sat(complete_hypergraph(4, 3), 2, {k3}, "(4,3,2,K3)");
    sat(complete_hypergraph(5, 3), 2, {k4}, "(5,3,2,K4)");
    sat(complete_hypergraph(6, 2), 2, family, "(6,2,2,K4*)");
    return ok;
}

// ---------------------------------------------------------------------- 6 --

bool criterion_recursive_triangle(std::string& detail) {
    bool ok = true;
    auto k3 = *builtin_pattern("k3");
    for (int n : {8, 12, 16, 20}) {
        auto out = recursive_triangle_coloring(n);
        ok &= expect(coloring_valid(*out.host, *out.coloring), "not total", detail);
        ok &= expect(
            !mono_berge_in_coloring(*out.host, *out.coloring, k3).has_value(),
            "mono Berge-K3 at n=" + std::to_string(n), detail);
        ok &= expect(static_cast<double>(out.used_colors) <=
                         2.0 * n + std::log2(static_cast<double>(n)),
                     "color count bound broken at n=" + std::to_string(n), detail);
    }
    for (int n : {64, 256, 1024}) {
        auto out = recursive_triangle_coloring(n);
        ok &= expect(!out.coloring.has_value(), "should be counts-only", detail);
        ok &= expect(static_cast<double>(out.declared_colors) <=
                         2.0 * n + std::log2(static_cast<double>(n)),
                     "count bound broken at n=" + std::to_string(n), detail);
    }
    return ok;
}

// ---------------------------------------------------------------------- 7 --

bool criterion_tripartite_cover(std::string& detail) {
    bool ok = true;
    auto k4 = *builtin_pattern("k4");
    for (int n : {8, 16, 32, 64}) {
        auto out = tripartite_cover_coloring(n);
        ok &= expect(coloring_valid(*out.host, *out.coloring), "not total", detail);
        for (std::size_t i = 0; i < out.host->edges.size(); ++i) {
            Mask e = out.host->edges[i];
            const auto& p = out.parts[out.coloring->color[i]];
            if (popcount(e & p[0]) != 1 || popcount(e & p[1]) != 1 ||
                popcount(e & p[2]) != 1) {
                ok = expect(false, "class not 3-partite at n=" + std::to_string(n),
                            detail);
                break;
            }
        }
        ok &= expect(
            !mono_berge_in_coloring(*out.host, *out.coloring, k4).has_value(),
            "mono Berge-K4 at n=" + std::to_string(n), detail);
        double lg = std::log2(static_cast<double>(n));
        ok &= expect(static_cast<double>(out.declared_colors) <= 2.0 * lg * lg,
                     "2log^2 bound broken at n=" + std::to_string(n), detail);
        ok &= expect(out.declared_colors <=
                         2 * static_cast<long long>(std::ceil(lg)) +
                             tripartite_cover_color_count((n + 1) / 2),
                     "recurrence broken at n=" + std::to_string(n), detail);
    }
    // exhaustive triangle-freeness of the bit pair-coloring up to m = 64
    for (int m = 3; m <= 64; ++m)
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y)
                for (int z = y + 1; z < m; ++z) {
                    int a = msb_pair_color(x, y), b = msb_pair_color(y, z),
                        c = msb_pair_color(x, z);
                    if (a == b && b == c)
                        return expect(false, "mono triangle in bit coloring",
                                      detail);
                }
    return ok;
}

// ---------------------------------------------------------------------- 8 --

bool criterion_non_uniform(std::string& detail) {
    bool ok = true;
    auto k3 = *builtin_pattern("k3");
    auto tkk = *builtin_pattern("2k2");

    for (int n = 3; n <= 12; ++n) {
        auto out = quad_class_coloring(n);
        ok &= expect(out.used_colors == (1LL << (n - 2)),
                     "quad_class color count at n=" + std::to_string(n), detail);
        std::vector<std::vector<int>> classes(out.coloring->k);
        for (std::size_t i = 0; i < out.host->edges.size(); ++i)
            classes[out.coloring->color[i]].push_back(static_cast<int>(i));
        for (const auto& cls : classes) {
            if (cls.size() != 4) {
                ok = expect(false, "quad class size != 4", detail);
                break;
            }
            std::vector<Mask> usable;
            for (int i : cls)
                if (out.host->edges[i]) usable.push_back(out.host->edges[i]);
            if (usable.size() < 3) continue;
            if (find_berge(hypergraph_from_edges(n, usable, true), k3)) {
                ok = expect(false, "quad class contains Berge-K3", detail);
                break;
            }
        }
    }

    ok &= expect(threshold_triples_all_berge_k3(7), "threshold fails at n=7", detail);
    ok &= expect(threshold_triples_all_berge_k3(9), "threshold fails at n=9", detail);
    ok &= expect(!triple_forms_berge_k3(0b00111, 0b01011, 0b10011),
                 "the n=5 failing triple unexpectedly forms Berge-K3", detail);

    for (int n : {7, 9, 11}) {
        auto rep = dual_f_report(n, k3, FMode::NonUniform);
        ok &= expect(rep.exact == (1LL << (n - 2)),
                     "dual f not exact at n=" + std::to_string(n), detail);
    }

    for (int n = 3; n <= 10; ++n) {
        auto out = two_k2_coloring(n);
        long long formula =
            (1LL << n) - static_cast<long long>(n) * (n - 1) / 2 - n - 1;
        ok &= expect(out.used_colors == formula,
                     "two_k2 count at n=" + std::to_string(n), detail);
    }

    ok &= expect(dual_f_report(4, tkk, FMode::NonUniform).exact == 5,
                 "f(4, Berge-2K2) != 5", detail);
    return ok;
}

// ---------------------------------------------------------------------- 9 --

bool criterion_gstar_sizes(std::string& detail) {
    bool ok = true;
    ok &= expect(gstar_family(*builtin_pattern("k4"), 0).size() == 3,
                 "|K4*(v)| != 3", detail);
    // k4e: vertices 0 and 1 have degree 3
    ok &= expect(gstar_family(*builtin_pattern("k4e"), 0).size() == 5,
                 "|K4-e*(deg-3 v)| != 5", detail);
    return ok;
}

// --------------------------------------------------------------------- 10 --

bool criterion_shadow_lift(std::string& detail) {
    std::mt19937_64 rng(424242);
    bool ok = true;
    int colorings = 0, lifts = 0;
    for (const auto& base : {*builtin_pattern("k4"), *builtin_pattern("k3")}) {
        auto specs = gstar_extension_specs(base, 0);
        for (int it = 0; it < 55; ++it) {
            int n = 7 + static_cast<int>(rng() % 2); // n <= 8
            int k = 2 + static_cast<int>(rng() % 2); // k <= 3
            auto host = complete_hypergraph(n, 3);
            EdgeColoring c{k, {}};
            c.color.resize(host.edges.size());
            for (auto& col : c.color) col = static_cast<int>(rng() % k);
            ++colorings;
            for (int xv = 0; xv < n; ++xv) {
                Mask x = vbit(xv);
                auto sh = shadow_coloring(host, c, x);
                for (const auto& spec : specs) {
                    for (int col = 0; col < k; ++col) {
                        std::vector<std::pair<int, int>> pairs;
                        for (std::size_t e = 0; e < sh.pairs.edges.size(); ++e)
                            if (sh.colors.color[e] == col)
                                pairs.push_back(sh.pairs.edges[e]);
                        if (pairs.size() < spec.result.edges.size()) continue;
                        auto cls = graph_from_edges(sh.pairs.n, pairs);
                        auto emb = find_subgraph(cls, spec.result);
                        if (!emb) continue;
                        std::vector<int> host_emb(spec.result.n);
                        for (int i = 0; i < spec.result.n; ++i)
                            host_emb[i] = sh.vertex_ids[(*emb)[i]];
                        auto lift = shadow_lift(host, c, x, spec, host_emb);
                        ok &= expect(lift.color == col, "lift color mismatch",
                                     detail);
                        ok &= expect(verify_witness(host, base, lift.witness).ok,
                                     "lifted witness invalid", detail);
                        for (int he : lift.witness.assignment)
                            ok &= expect(c.color[he] == col,
                                         "lifted hyperedge off-color", detail);
                        ++lifts;
                    }
                }
            }
        }
    }
    ok &= expect(colorings >= 100, "fewer than 100 colorings", detail);
    ok &= expect(lifts >= 100, "too few lift events exercised", detail);
    return ok;
}

// --------------------------------------------------------------------- 11 --

bool criterion_formula_evaluators(std::string& detail) {
    bool ok = true;
    // boundary: eps = 1/4 is outside the open interval; the grid maximum
    // 249/1000 is the last admissible point and evaluates exactly
    bool threw = false;
    try {
        kstar_bound(2, Rational(1, 4));
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    ok &= expect(threw, "eps=1/4 accepted", detail);
    ok &= expect(kstar_bound(2, Rational(249, 1000)) == Rational(1560001, 124500),
                 "kstar grid value wrong", detail);
    auto opt = kstar_bound_opt(2);
    ok &= expect(opt.eps == Rational(249, 1000) &&
                     opt.value == Rational(1560001, 124500),
                 "kstar optimizer wrong", detail);
    ok &= expect(kstar_bound_opt(1).value == Rational(1249, 249),
                 "kstar k=1 optimum wrong", detail);

    ok &= expect(acyclic_upper_bound(*builtin_pattern("k4e"), 3, 3) == 49,
                 "acyclic bound K4-e", detail);
    ok &= expect(!acyclic_upper_bound(*builtin_pattern("k4"), 2, 3).has_value(),
                 "K4 must not be acyclic-reducible", detail);
    ok &= expect(acyclic_upper_bound(*builtin_pattern("p4"), 2, 4) == 34,
                 "acyclic bound P4", detail);

    ok &= expect(shadow_upper_bound(7, 3) == 8, "shadow bound (7,3)", detail);
    ok &= expect(shadow_upper_bound(11, 2) == 11, "shadow bound r=2", detail);
    ok &= expect(shadow_upper_bound(9, 5) == 12, "shadow bound r=5", detail);
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "detector agrees with brute-force oracle on 200 random instances",
         criterion_detector_soundness},
        {2, "exact Turan values (ex_3(5,K4)=5, ex_3(4,K3)=2, Gyori cap)",
         criterion_turan_exactness},
        {3, "counting upper bounds 5,5,6,7,8,9 with exact k=7 boundary",
         criterion_counting_bounds},
        {4, "fixed colorings verify as target-free partitions",
         criterion_constructions},
        {5, "exhaustive search certifies the exact small Ramsey values",
         criterion_exhaustive_values},
        {6, "recursive triangle coloring: mono-free, <= 2n + log n colors",
         criterion_recursive_triangle},
        {7, "tripartite cover: 3-partite classes, mono-K4-free, 2log^2 n",
         criterion_tripartite_cover},
        {8, "non-uniform results (quad classes, thresholds, dual f, 2K2)",
         criterion_non_uniform},
        {9, "extension family sizes |K4*(v)|=3, |K4-e*(v)|=5",
         criterion_gstar_sizes},
        {10, "shadow lifts turn mono extension copies into verified witnesses",
         criterion_shadow_lift},
        {11, "formula evaluators return the exact rationals/integers",
         criterion_formula_evaluators},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::printf("criterion %2d: %s  (%.2fs)  %s%s%s\n", c.id,
                    ok ? "PASS" : "FAIL", secs, c.description.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
