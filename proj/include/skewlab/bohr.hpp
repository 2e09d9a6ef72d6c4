#pragma once

#include <memory>
#include <vector>

#include "skewlab/group.hpp"
#include "skewlab/group_function.hpp"
#include "skewlab/report.hpp"

namespace skewlab {

// Bohr(Gamma, phi) = { x : |1 - gamma(x)| <= phi for all gamma in Gamma }.
// Always carried as the tuple (frequency set, width, materialized members);
// set equality of two Bohr sets says nothing about their tuples. Dilates of
// the same tuple share the per-element radius table.
struct BohrSet {
    AbelianGroup group;
    std::vector<std::vector<int>> gamma;  // frequency coordinates
    double phi = 0;
    Subset members;
    std::shared_ptr<const std::vector<double>> radii;  // max_gamma |1 - gamma(x)|
    int boundary_ties = 0;  // elements whose criterion sits within 1e-12 of phi

    int rank() const { return static_cast<int>(gamma.size()); }
    int size() const { return members.size(); }
    double measure() const { return static_cast<double>(members.size()) / group.order(); }
    Rational measure_exact() const { return Rational(members.size(), group.order()); }
};

BohrSet bohr_set(const AbelianGroup& g, const std::vector<std::vector<int>>& gamma, double phi);

// B_rho = Bohr(Gamma, rho * phi); rho * phi is clamped to 2 (with a note in
// boundary diagnostics) since widths beyond 2 are vacuous.
BohrSet dilate(const BohrSet& b, double rho);

// Tuple-level containment: Gamma' >= Gamma and phi' <= phi.
bool is_sub_bohr(const BohrSet& sub, const BohrSet& super);

// |B_{1+kappa}| <= (1+100 kappa r)|B| and |B_{1-kappa}| >= (1-100 kappa r)|B|
// for all kappa in [0, 1/100r], decided exactly by enumerating the
// breakpoints of the step functions kappa -> |B_{1 +/- kappa}|.
bool is_regular(const BohrSet& b);

// Independent dense-sampling check of the same definition (test oracle).
bool is_regular_grid_oracle(const BohrSet& b, int grid_points = 1000);

// Largest scan candidate rho in [1/2, 1] with B_rho regular. Throws if the
// scan and a 10^4-point fallback grid both fail (would contradict the
// existence guarantee, so it is surfaced as a bug trap).
double find_regular_dilate(const BohrSet& b);

// |B_rho| >= (rho/4)^r |B| for rho in (0,1).
CheckReport check_size_bound(const BohrSet& b, double rho);

// mu_B <= 2 mu_{B_{1+rho}} * nu pointwise, for regular B and nu supported on
// B_rho with rho <= c_dom / r. Outside the regime the check still runs and
// the report carries a diagnostic.
CheckReport check_domination(const BohrSet& b, const RealFn& nu, double rho,
                             const Constants& cfg = {});

// ||mu_B * nu - mu_B||_1 <= c_smooth * rho * r; asserted only in the
// regularity regime rho <= 1/100r, reported otherwise.
CheckReport check_l1_smoothing(const BohrSet& b, const RealFn& nu, double rho,
                               const Constants& cfg = {});

// |<f * nu, mu_B> - <f, mu_B>| <= c_smooth * ||f||_inf * rho * r.
CheckReport check_approx_invariance(const RealFn& f, const BohrSet& b, const RealFn& nu,
                                    double rho, const Constants& cfg = {});

}  // namespace skewlab
