#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewlab/report.hpp"

namespace skewlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // deterministic content only; no wall times
};

// Runs acceptance criteria 1..12 (12 = in-process report determinism).
// Every corpus derives from the seed, so identical seeds replay identical
// results.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const Constants& cfg = {});

// The byte-stable report the CLI `suite` subcommand emits.
std::string build_suite_report(std::uint64_t seed, const Constants& cfg = {});

}  // namespace skewlab
