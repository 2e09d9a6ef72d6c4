#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewlab/corners.hpp"
#include "skewlab/rng.hpp"

namespace skewlab {

bool verify_scf(const SkewInstance& inst);

struct SearchResult {
    std::string instance;
    int best_size = 0;
    std::vector<std::pair<int, int>> witness;  // grid points (1-based) or (column, row) ranks
    bool optimal = false;
    long long nodes = 0;
};

// Branch and bound over candidate points in row-major order, include-branch
// first, with incremental violation checks through the new point and a
// remaining-points bound. Completing the search certifies optimality; a
// spent budget leaves the best found with optimal = false. Among maximum
// sets the canonical (first-found) witness is the one preferring early
// points.
SearchResult exact_max_scf_grid(int n, long long node_budget = -1);

// Group-mode search over G x G, optionally restricted to a candidate window
// (used for grid-embedding consistency checks).
SearchResult exact_max_scf_group(const AbelianGroup& g,
                                 const std::vector<std::pair<int, int>>* window = nullptr,
                                 long long node_budget = -1);

// Random-order greedy insertion on top of a full-row seed, so the result is
// never smaller than n.
SearchResult greedy_scf_grid(int n, std::uint64_t seed);

}  // namespace skewlab
