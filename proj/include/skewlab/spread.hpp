#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewlab/bohr.hpp"
#include "skewlab/corners.hpp"
#include "skewlab/report.hpp"
#include "skewlab/subspaces.hpp"

namespace skewlab {

// A strict witness against (r, lambda)-simultaneous spreadness: a subspace
// and per-column shifts with sum of squared restricted densities exceeding
// lambda times the sum of squared global densities. Always re-verifiable
// from the raw data it carries.
struct FieldViolation {
    Subspace witness;
    std::vector<int> shifts;  // indexed by column rank
    Rational lhs;
    Rational rhs;
};

struct BohrViolation {
    BohrSet witness;
    std::vector<int> shifts;
    Rational lhs;
    Rational rhs;
};

// Exhaustive decision over subspaces of co-dimension <= r in canonical
// order, per-column best shifts over coset representatives. Returns the
// first strict violation, or nullopt as the spreadness certificate. The
// single-set notion is the one-column case.
std::optional<FieldViolation> is_sim_spread(const ColumnFamily& fam, int r, const Rational& lambda);

// Decision relative to an explicit candidate family of sub-Bohr sets (the
// universal quantifier over all sub-Bohr sets is not enumerable). Candidates
// failing the preconditions (sub-Bohr of b, rank <= rk(b)+r, measure >=
// delta * mu(b), regular) are skipped and noted in `skipped`.
std::optional<BohrViolation> is_sim_spread_bohr(const ColumnFamily& fam, const BohrSet& b,
                                                const std::vector<BohrSet>& candidates, int r,
                                                const Rational& lambda, double delta,
                                                std::vector<std::string>* skipped = nullptr);

struct FieldIncrementStep {
    Subspace witness;
    std::vector<int> shifts;
    int slice_rep = 0;          // w: representative of the chosen affine slice V + w
    Rational potential_before;  // (1/|W|) sum_g (|A_g|/|W|)^2 in the ambient of the step
    Rational potential_after;
    int ambient_dim = 0;
};

struct FieldIncrementTrace {
    std::vector<FieldIncrementStep> steps;
    ColumnFamily final_family;  // over F_p^(final_dim), remapped coordinates
    int final_dim = 0;
    bool certified = false;     // final family passed is_sim_spread
    Rational final_sum_sq;      // sum_g |A_g|^2 over the final family
    Rational density_floor;     // 2^-d |V|^3
    bool density_holds = false;
};

// Iterated restriction: find a violation, pick the affine index slice
// achieving the averaged inequality (exact), rebuild the collection inside
// the witness, recurse. Per-step potential gain is strictly (1 + eps); the
// iteration count never exceeds ceil(d / log2(1+eps)) + 1 (bug trap
// otherwise).
FieldIncrementTrace density_increment(const ColumnFamily& fam, int r, const Rational& eps, int d);

using BohrCandidateGen = std::function<std::vector<BohrSet>(const BohrSet&)>;

// Single-character frequency extensions crossed with a geometric grid of
// widths, regularized; plus regularized pure dilates.
BohrCandidateGen default_bohr_candidates(int max_new_freqs = 0);

struct BohrIncrementStep {
    BohrSet witness;
    std::vector<int> shifts;
    int slice_rep = 0;  // g: translate of the dilated witness chosen as the new index
    Rational potential_before;  // (1/|C|) sum_{g in C} (|A_g|/|B|)^2
    Rational potential_after;
    double tau_used = 0;
    CheckReport averaging;  // <mu_C * mu_{B'_{sigma'}}, f> >= (1 - eps/4) <mu_C, f>
};

struct BohrIncrementTrace {
    std::vector<BohrIncrementStep> steps;
    ColumnFamily final_family;
    BohrSet final_container;   // R
    BohrSet final_index_bohr;  // the dilate whose translate indexes the family
    int final_index_shift = 0; // w with C = (R_sigma) + w
    double final_sigma = 1.0;
    bool certified = false;
    Rational final_sum_sq;      // sum_{g in C} |A_g|^2
    Rational density_floor;     // 2^-d |R|^2 |C|
    bool density_holds = false;
};

BohrIncrementTrace density_increment_bohr(const ColumnFamily& fam, const BohrSet& ambient, int r,
                                          const Rational& eps, double delta, int d,
                                          const BohrCandidateGen& gen, const Constants& cfg = {});

// || (1/alpha sum 1_{A_i} o 1_{A_i}) * mu_W ||_inf <= sqrt(lambda) for
// subspace witnesses; <= sqrt(lambda) / mu(B) for Bohr witnesses inside a
// container B.
CheckReport check_infnorm_consequence(const ColumnFamily& fam, const Subspace& w,
                                      const Rational& lambda);
CheckReport check_infnorm_consequence(const ColumnFamily& fam, const BohrSet& container,
                                      const BohrSet& w, const Rational& lambda);

}  // namespace skewlab
