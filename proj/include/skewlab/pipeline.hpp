#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "skewlab/bohr.hpp"
#include "skewlab/corners.hpp"
#include "skewlab/report.hpp"
#include "skewlab/rng.hpp"
#include "skewlab/spread.hpp"
#include "skewlab/subspaces.hpp"

namespace skewlab {

// --- non-uniformity ----------------------------------------------------

struct UniformBranch {
    Rational eta;  // <mu_F, mu_D>
};

struct GapBranch {
    int p = 1;
    double gap = 0;        // ||mu_F - 1||_p, verified >= eps/2
    double mu_d_inf = 0;   // ||mu_D||_inf, verified <= 2^d
    Rational eta;
};

// Either |<mu_F, mu_D> - 1| <= eps, or ||mu_F - 1||_p >= eps/2 at p =
// max(1, d), with the Hoelder chain eps < ||mu_F - 1||_p ||mu_D||_inf^(1/p)
// and ||mu_D||_inf <= 2^d both verified.
std::variant<UniformBranch, GapBranch> nonuniformity_gap(const ColumnFamily& fam, double eps, int d);

// A family of subsets of a regular Bohr set R indexed by C = R_sigma.
struct BohrFamily {
    ColumnFamily fam;  // columns inside R.members, index set = C.members
    BohrSet R;
    BohrSet C;
    double sigma = 1.0;
};

BohrFamily make_bohr_family(ColumnFamily fam, BohrSet R, double sigma);

struct BohrGapReport {
    bool uniform = false;
    Rational eta;            // <mu_F, mu_D>
    double branch1_dev = 0;  // |eta - mu(R)^-1|
    double branch1_bound = 0;
    int p = 2;
    double gap = 0;  // ||(1/alpha) F_0||_p(mu_C)
    double gap_bound = 0;
    bool gap_holds = false;
    // Error terms (2)-(4) of the centered expansion, each asserted
    // <= (eps/16) mu(R)^-1 in regime.
    double term2 = 0, term3 = 0, term4 = 0;
    double term_bound = 0;
    bool terms_ok = false;
    bool in_regime = true;
    std::string note;
};

BohrGapReport nonuniformity_gap_bohr(const BohrFamily& bf, double eps, int d,
                                     const Constants& cfg = {});

// --- decoupling and unbalancing -----------------------------------------

// lhs = ||sum f_g o f_g||_p, rhs = ||sum f_g o f_g^g||_p, with lhs >= rhs
// asserted. Odd p rejected (the moment expansion needs even p).
std::pair<double, double> decoupling_check(const std::vector<std::pair<int, RealFn>>& fs, int p);

// Measured variant with its factor 1/2:
// ||sum f_g o f_g||_p(nu) >= (1/2) ||sum f_g o f_g^g||_p(mu_B) where
// nu = mu_B' o mu_B' * mu_B'' o mu_B''.
CheckReport shift_removal_check(const std::vector<std::pair<int, RealFn>>& fs, const BohrSet& b,
                                const BohrSet& bp, const BohrSet& bpp, int p,
                                const Constants& cfg = {});

// Smallest p' <= budget with ||f + 1||_p'(nu) >= 1 + eps/2, given f and nu
// spectrally non-negative and ||f||_p(nu) >= eps. Existence is guaranteed by
// the odd-moments principle; exhausting the budget is surfaced as a bug trap.
int unbalance(const RealFn& f, const RealFn& nu, double eps, int p, const Constants& cfg = {});

// --- dependent random choice ---------------------------------------------

struct LevelSet {
    double threshold = 0;
    Subset s;
    double norm_value = 0;  // ||mu_f||_p(nu) the threshold came from
    int p = 1;
};

struct WitnessPair {
    Subset m1, m2;
    double density1 = 0;  // mu_B1(M1); reported, not asserted
    double density2 = 0;
};

struct RobustWitness {
    WitnessPair pair;
    LevelSet level;
    double correlation = 0;  // <mu_M1 o mu_M2, 1_S>, >= 1 - delta
    bool from_fallback = false;
};

// Dependent random choice in the embedded product group H = G x G with
// L = {0} x G, contract-validated before return; deterministic exhaustive
// fallback over candidate pairs for |G| <= 16. Throws with the best
// candidate's correlation if the budget is exhausted.
RobustWitness find_robust_witness(const ColumnFamily& fam, const Subset& b1, const Subset& b2,
                                  int p, double eps, double delta, int budget, Rng& rng);

// --- almost periodicity ----------------------------------------------------

// First subspace (canonical order, codim <= max_codim) with
// |<mu_V * mu_M1 * mu_M2, 1_S> - <mu_M1 * mu_M2, 1_S>| <= eps.
std::optional<Subspace> almost_periodicity_search(const Subset& m1, const Subset& m2,
                                                  const Subset& s, double eps, int max_codim);

// The o-convolution companion (substitute M1 := M2, M2 := -M1).
std::optional<Subspace> almost_periodicity_search_diff(const Subset& m1, const Subset& m2,
                                                       const Subset& s, double eps, int max_codim);

struct APReport {
    double base = 0;  // <mu_M1 o mu_M2, 1_S>
    double conv = 0;  // <mu_W * mu_M1 o mu_M2, 1_S>
    double deviation = 0;
    bool pass = false;
    std::string note;  // size diagnostic for the Bohr case
};

APReport almost_periodicity_verify(const Subset& w, const Subset& m1, const Subset& m2,
                                   const Subset& s, double eps,
                                   const Subset* bohr_container = nullptr);

// --- the driver -------------------------------------------------------------

struct IncrementCertificate {
    Subspace witness;
    double peak = 0;  // ||mu_F' * mu_V||_inf
};

struct NoCertificate {
    std::string reason;
    double best_peak = 0;
};

struct DriverResult {
    std::variant<UniformBranch, IncrementCertificate, NoCertificate> cert;
    std::vector<CheckReport> trace;  // instrumented pipeline, non-authoritative
};

// Branch (1) exactly; otherwise the instrumented pipeline (non-uniformity ->
// decoupling -> unbalance -> robust witness -> almost periodicity -> final
// chain), then a direct exhaustive peak search so the returned certificate is
// always sound. NoCertificate when neither branch is certifiable within
// r_max.
DriverResult structure_vs_pseudorandomness(const ColumnFamily& fam, double eps, int d, int r_max,
                                           Rng& rng, const Constants& cfg = {});

struct CombiningReport {
    Rational eta;
    double branch1_dev = 0;
    double branch1_bound = 0;
    bool branch1_holds = false;
    double peak = 0;  // ||mu_F' * mu_B||_inf
    double branch2_bound = 0;
    bool branch2_holds = false;
    double chain_lhs = 0;  // 1 + eps/80
    double chain_rhs = 0;  // (1 - eps/64)(1 - eps/32)(1 + eps/16)
    bool chain_holds = false;
    bool in_regime = true;
};

// Pure verifier for the Bohr-side combining statement at a supplied B.
CombiningReport verify_int_combining(const BohrFamily& bf, double eps, const BohrSet& b,
                                     const Constants& cfg = {});

}  // namespace skewlab
