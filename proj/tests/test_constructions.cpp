#include <doctest.h>

#include <map>
#include <set>

#include "berge/constructions.hpp"
#include "berge/detect.hpp"
#include "berge/patterns.hpp"
#include "test_helpers.hpp"

using namespace berge;

namespace {

// partition check: every host edge colored exactly once, every color < k
void check_partition(const ConstructionOutput& out) {
    REQUIRE(out.host.has_value());
    REQUIRE(out.coloring.has_value());
    REQUIRE(coloring_valid(*out.host, *out.coloring));
    CHECK(out.used_colors <= out.declared_colors);
}

std::map<int, std::vector<Mask>> classes_of(const ConstructionOutput& out) {
    std::map<int, std::vector<Mask>> cls;
    for (std::size_t i = 0; i < out.host->edges.size(); ++i)
        cls[out.coloring->color[i]].push_back(out.host->edges[i]);
    return cls;
}

bool class_berge_free(const std::vector<Mask>& edges, int n, const Graph& g) {
    std::vector<Mask> usable;
    for (Mask e : edges)
        if (e != 0) usable.push_back(e);
    if (usable.size() < g.edges.size()) return true;
    return !find_berge(hypergraph_from_edges(n, usable, true), g).has_value();
}

} // namespace

TEST_SUITE_BEGIN("constructions");

TEST_CASE("proper edge colorings are proper and complete") {
    for (int m = 2; m <= 9; ++m) {
        auto classes = proper_edge_coloring_classes(m);
        CHECK(static_cast<int>(classes.size()) == (m % 2 == 0 ? m - 1 : m));
        std::set<std::pair<int, int>> seen;
        for (const auto& cls : classes) {
            Mask touched = 0;
            for (auto [u, v] : cls) {
                CHECK(u < v);
                CHECK_FALSE(((touched >> u) & 1) != 0);
                CHECK_FALSE(((touched >> v) & 1) != 0);
                touched |= vbit(u) | vbit(v);
                CHECK(seen.insert({u, v}).second);
            }
        }
        CHECK(seen.size() == static_cast<std::size_t>(m * (m - 1) / 2));
    }
}

TEST_CASE("pair_complement_coloring") {
    auto c3 = pair_complement_coloring(3);
    check_partition(c3);
    CHECK(c3.used_colors == 4);

    auto c5 = pair_complement_coloring(5);
    check_partition(c5);
    CHECK(c5.declared_colors == 16);
    for (auto& [col, edges] : classes_of(c5)) CHECK(edges.size() == 2);
    // the class containing {0,1} also contains {2,3,4}
    CHECK(c5.coloring->color[0b00011] == c5.coloring->color[0b11100]);

    // classes of two disjoint sets hold no Berge-G for connected G
    for (auto& [col, edges] : classes_of(c5)) {
        CHECK(class_berge_free(edges, 5, complete_graph(3)));
        CHECK(class_berge_free(edges, 5, *builtin_pattern("p3")));
    }
    CHECK_THROWS_AS(pair_complement_coloring(1), std::invalid_argument);
}

TEST_CASE("quad_class_coloring partitions into 2^(n-2) Berge-K3-free classes") {
    auto q3 = quad_class_coloring(3);
    check_partition(q3);
    auto cls3 = classes_of(q3);
    CHECK(cls3.size() == 2);
    for (auto& [col, edges] : cls3) CHECK(edges.size() == 4);

    CHECK(quad_class_coloring(5).declared_colors == 8);

    for (int n = 3; n <= 9; ++n) {
        auto q = quad_class_coloring(n);
        check_partition(q);
        CHECK(q.used_colors == (1LL << (n - 2)));
        for (auto& [col, edges] : classes_of(q)) {
            CHECK(edges.size() == 4);
            CHECK(class_berge_free(edges, n, complete_graph(3)));
        }
    }
}

TEST_CASE("two_k2_coloring color count and class structure") {
    auto t4 = two_k2_coloring(4);
    check_partition(t4);
    CHECK(t4.declared_colors == 5);
    CHECK(t4.used_colors == 5);

    auto t3 = two_k2_coloring(3);
    CHECK(t3.declared_colors == 1);
    CHECK(t3.used_colors == 1);

    for (int n = 3; n <= 8; ++n) {
        auto t = two_k2_coloring(n);
        check_partition(t);
        long long expect =
            (1LL << n) - static_cast<long long>(n) * (n - 1) / 2 - n - 1;
        CHECK(t.used_colors == expect);
        // every multi-set class fits inside one 3-element set
        for (auto& [col, edges] : classes_of(t)) {
            if (edges.size() < 2) continue;
            Mask hull = 0;
            for (Mask e : edges) hull |= e;
            CHECK(popcount(hull) <= 3);
            CHECK(class_berge_free(edges, n, *builtin_pattern("2k2")));
        }
    }
}

TEST_CASE("recursive_triangle_coloring: partition, counts, no mono Berge-K3") {
    for (int n = 3; n <= 20; ++n) {
        auto out = recursive_triangle_coloring(n);
        check_partition(out);
        CHECK(out.used_colors == out.declared_colors);
        double bound = 2.0 * n + std::log2(static_cast<double>(n));
        CHECK(static_cast<double>(out.used_colors) <= bound);
        CHECK_FALSE(
            mono_berge_in_coloring(*out.host, *out.coloring, complete_graph(3))
                .has_value());
    }
}

TEST_CASE("recursive_triangle_coloring counts obey the halving recurrence") {
    // test-local recurrence: f(n) <= n + f(ceil(n/2)), f(2) = 0
    std::function<long long(long long)> upper = [&](long long n) -> long long {
        if (n < 3) return 0;
        return n + upper((n + 1) / 2);
    };
    for (int n : {8, 16, 64, 256, 1024}) {
        auto out = recursive_triangle_coloring(n);
        CHECK(out.declared_colors <= upper(n));
        CHECK(static_cast<double>(out.declared_colors) <=
              2.0 * n + std::log2(static_cast<double>(n)));
    }
    CHECK(recursive_triangle_coloring(1024).declared_colors <= 2058);
    CHECK(recursive_triangle_coloring(8).declared_colors <= 19);
}

TEST_CASE("tripartite_cover_coloring: 3-partite classes, no mono Berge-K4") {
    for (int n = 4; n <= 64; ++n) {
        auto out = tripartite_cover_coloring(n);
        check_partition(out);
        REQUIRE(out.parts.size() == static_cast<std::size_t>(out.declared_colors));
        bool parts_ok = true;
        for (std::size_t i = 0; i < out.host->edges.size(); ++i) {
            Mask e = out.host->edges[i];
            const auto& p = out.parts[out.coloring->color[i]];
            parts_ok &= popcount(e & p[0]) == 1 && popcount(e & p[1]) == 1 &&
                        popcount(e & p[2]) == 1;
        }
        CHECK(parts_ok);
        if (n <= 16) // larger hosts are exercised by the acceptance suite
            CHECK_FALSE(
                mono_berge_in_coloring(*out.host, *out.coloring, complete_graph(4))
                    .has_value());
    }
    CHECK(tripartite_cover_coloring(16).declared_colors <= 32);
}

TEST_CASE("bit pair-coloring is triangle-free with few colors") {
    // m = 8 vertices: 3 colors, no monochromatic triangle, exhaustively
    std::set<int> used;
    for (int x = 0; x < 8; ++x)
        for (int y = x + 1; y < 8; ++y) used.insert(msb_pair_color(x, y));
    CHECK(used.size() == 3);
    for (int x = 0; x < 8; ++x)
        for (int y = x + 1; y < 8; ++y)
            for (int z = y + 1; z < 8; ++z) {
                int a = msb_pair_color(x, y), b = msb_pair_color(y, z),
                    c = msb_pair_color(x, z);
                CHECK_FALSE((a == b && b == c));
            }
}

TEST_CASE("fixed colorings are partitions with the declared color counts") {
    for (const auto& name : fixed_coloring_names()) {
        auto out = fixed_coloring(name);
        check_partition(out);
        CHECK(out.used_colors == out.declared_colors);
    }
    CHECK(fixed_coloring("K5_3_4COL").used_colors == 4);
    auto k6 = fixed_coloring("K6_3_5COL");
    CHECK(k6.used_colors == 5);
    CHECK(k6.host->edges.size() == 20);
    for (auto& [col, edges] : classes_of(k6)) CHECK(edges.size() == 4);
    CHECK_THROWS_AS(fixed_coloring("NOPE"), std::invalid_argument);
}

TEST_CASE("fixed colorings avoid their targets") {
    CHECK_FALSE(mono_berge_in_coloring(*fixed_coloring("K4_3_2COL").host,
                                       *fixed_coloring("K4_3_2COL").coloring,
                                       complete_graph(3))
                    .has_value());
    auto bk4 = fixed_coloring("K5_3_BK4_2COL");
    for (auto& [col, edges] : classes_of(bk4)) CHECK(edges.size() == 5);
    CHECK_FALSE(mono_berge_in_coloring(*bk4.host, *bk4.coloring, complete_graph(4))
                    .has_value());
}

TEST_CASE("threshold_family") {
    auto t = threshold_family(5, 3);
    CHECK(t.edges.size() == 16); // C(5,3)+C(5,4)+C(5,5)
    CHECK(static_cast<long long>(t.edges.size()) ==
          test::pascal_binomial(5, 3) + test::pascal_binomial(5, 4) +
              test::pascal_binomial(5, 5));

    auto t74 = threshold_family(7, 4);
    CHECK(t74.edges.size() == 64);
    for (std::size_t i = 0; i < t74.edges.size(); ++i)
        for (std::size_t j = i + 1; j < t74.edges.size(); ++j)
            CHECK(popcount(t74.edges[i] & t74.edges[j]) >= 2 * 4 - 7);

    // n=5, s=3 contains the triple {123,124,125} with no Berge-K3
    auto bad = hypergraph_from_edges(
        5, {0b00111, 0b01011, 0b10011}); // 012, 013, 014 in 0-based labels
    CHECK_FALSE(find_berge(bad, complete_graph(3)).has_value());
    for (Mask e : bad.edges)
        CHECK(std::find(t.edges.begin(), t.edges.end(), e) != t.edges.end());
}

TEST_SUITE_END();
