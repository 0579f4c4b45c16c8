#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berge/types.hpp"

namespace berge {

/// A generated lower-bound coloring. For hosts too large to materialize,
/// `host`/`coloring` are absent and only the color counts are reported.
struct ConstructionOutput {
    std::string family_tag;
    int n = 0;
    long long declared_colors = 0; // what the construction claims to use
    long long used_colors = 0;     // distinct colors actually appearing
    std::optional<Hypergraph> host;
    std::optional<EdgeColoring> coloring;
    // For tripartite constructions: per-color vertex partition witnessing
    // that the class is 3-partite. Empty for other families.
    std::vector<std::array<Mask, 3>> parts;
};

// Colorings of the powerset 2^[n].
ConstructionOutput pair_complement_coloring(int n); // classes {A, [n]\A}
ConstructionOutput quad_class_coloring(int n);      // 4-set classes, Berge-K3-free
ConstructionOutput two_k2_coloring(int n);          // Berge-2K2-free, exact count

// Colorings of K_n^3.
ConstructionOutput recursive_triangle_coloring(int n); // Berge-K3-free, <= 2n+log n
ConstructionOutput tripartite_cover_coloring(int n);   // Berge-K4-free, <= 2log^2 n

// Small explicit colorings. Names:
//   K4_3_2COL K5_3_4COL K6_3_5COL K7_3_6COL K5_3_BK4_2COL K6_GRAPH_K33
ConstructionOutput fixed_coloring(std::string_view name);
std::vector<std::string> fixed_coloring_names();

/// All subsets of [n] of size >= s; any two members meet in >= 2s-n vertices.
Hypergraph threshold_family(int n, int s);

// Building blocks, exposed for independent checking.
std::vector<std::vector<std::pair<int, int>>> proper_edge_coloring_classes(int m);
int msb_pair_color(int x, int y); // triangle-free coloring of pairs
long long recursive_triangle_color_count(long long n);
long long tripartite_cover_color_count(long long n);

} // namespace berge
