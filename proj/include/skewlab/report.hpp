#pragma once

#include <string>

namespace skewlab {

// Uniform result shape for the numeric verifiers: the two sides of the
// inequality under test, a verdict, and a free-form note (diagnostics such
// as regime violations or boundary ties).
struct CheckReport {
    std::string check;
    double lhs = 0;
    double rhs = 0;
    bool pass = false;
    std::string note;
};

// Tunable constants the source lemmas leave unspecified. Defaults are pinned
// here and overridable from the CLI via --const KEY=VAL.
struct Constants {
    double c_smooth = 400.0;      // L1-smoothing / approximate-invariance factor
    double c_dom = 0.01;          // domination regime: rho <= c_dom / r
    double c_sigma = 1.0 / 12800; // index-dilate regime: sigma <= c_sigma * eps / (r 2^d)
    double c_shift = 1.0 / 400;   // shift-removal regime: tau <= c_shift / rk(B)
    double unbalance_budget = 64; // p' search cap: p' <= unbalance_budget * p / eps
    double tau_scale = 1.0;       // initial tau = tau_scale * eps^2 / (r d 2^d)
};

}  // namespace skewlab
