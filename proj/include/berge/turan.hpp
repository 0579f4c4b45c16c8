#pragma once

#include <cstdint>

#include "berge/rational.hpp"
#include "berge/types.hpp"

namespace berge {

/// Exact Berge Turan value when `exhausted`; otherwise the best found
/// within the node budget.
struct TuranResult {
    int n = 0;
    int r = 0;
    long long value = 0;
    Hypergraph witness;
    bool exhausted = false;
    std::uint64_t nodes = 0;
};

constexpr std::uint64_t kDefaultTuranBudget = 200'000'000;

/// Branch-and-bound maximum over Berge-G-free subhypergraphs of K_n^r.
/// Desk-scale caps n <= 8, |E(G)| <= 6; beyond them the search still runs
/// but only up to the budget, reporting exhausted=false.
TuranResult turan_exact(int n, int r, const Graph& pattern,
                        std::uint64_t node_budget = kDefaultTuranBudget);

/// Gyori's bound: ex_r(n, Berge-K3) <= n^2 / (8(r-2)), exact rational.
Rational gyori_bound(long long n, int r);

} // namespace berge
