#pragma once

#include <vector>

#include "skewlab/bohr.hpp"
#include "skewlab/corners.hpp"
#include "skewlab/rng.hpp"

namespace skewlab {

// Deterministic corpus generators shared by the unit tests, the acceptance
// suite, and the CLI fixtures. Everything derives from a forked Rng.

// Mixed small groups of order <= 16 (includes Z/12, F_2^3, Z/2 x Z/6).
std::vector<AbelianGroup> small_group_pool();

// Groups of order <= 64 for the harmonic-analysis suite.
std::vector<AbelianGroup> harmonic_group_pool();

ColumnFamily random_family(const AbelianGroup& g, double col_density, double pt_density, Rng& rng);

GridSet random_grid(int n, int num_points, Rng& rng);

RealFn random_real_fn(const AbelianGroup& g, Rng& rng, double amplitude = 1.0);
RatFn random_rat_fn(const AbelianGroup& g, Rng& rng, int denom_bound = 8);
CplxFn random_cplx_fn(const AbelianGroup& g, Rng& rng);

// Random Bohr set over Z/N, rank <= max_rank; widths drawn away from the
// membership breakpoints so boundary ties cannot occur.
BohrSet random_bohr(int modulus, int max_rank, Rng& rng);

}  // namespace skewlab
