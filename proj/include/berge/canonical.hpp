#pragma once

#include <string>
#include <vector>

#include "berge/types.hpp"

namespace berge {

/// Isomorphism-class certificate: two (hyper)graphs on at most 12 vertices
/// get equal codes iff they are isomorphic.
struct CanonicalCode {
    int n = 0;
    std::vector<int> edge_sizes; // sorted popcount multiset
    std::string bytes;

    bool operator==(const CanonicalCode&) const = default;
    bool operator<(const CanonicalCode& o) const { return bytes < o.bytes; }

    std::string hex() const;
};

CanonicalCode canonical_code(const Hypergraph& h);
CanonicalCode canonical_code(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// All vertex permutations fixing the edge set (pattern graphs only, n <= 12).
std::vector<std::vector<int>> automorphisms(const Graph& g);

} // namespace berge
