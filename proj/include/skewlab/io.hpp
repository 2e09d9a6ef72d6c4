#pragma once

#include <string>

#include <json.hpp>

#include "skewlab/bohr.hpp"
#include "skewlab/corners.hpp"
#include "skewlab/group_function.hpp"
#include "skewlab/pipeline.hpp"
#include "skewlab/spread.hpp"

namespace skewlab {

using Json = nlohmann::json;

// GroupFunction: {"factors":[...], "kind":"rational|real|complex",
// "values":[...]}, rationals as "p/q" strings, complex as [re, im].
Json fn_to_json(const RatFn& f);
Json fn_to_json(const RealFn& f);
Json fn_to_json(const CplxFn& f);
RatFn rat_fn_from_json(const Json& j);
RealFn real_fn_from_json(const Json& j);
CplxFn cplx_fn_from_json(const Json& j);
std::string fn_kind(const Json& j);

// Instances: {"mode":"group","factors":[...],"columns":{"<rank>":[ranks...]}}
// or {"mode":"grid","n":N,"points":[[x,y],...]} with 1-based grid points.
Json instance_to_json(const SkewInstance& inst);
SkewInstance instance_from_json(const Json& j);

// Bohr sets: {"factors":[...],"gamma":[[coords]...],"phi":x}.
Json bohr_to_json(const BohrSet& b);
BohrSet bohr_from_json(const Json& j);

// Check reports as CSV rows: check,instance,lhs,rhs,pass.
std::string check_csv_header();
std::string check_csv_row(const CheckReport& rep, const std::string& instance);

// Counts CSV: instance_id,total,nontrivial,corner_nontrivial,eta.
std::string counts_csv_header();
std::string counts_csv_row(const std::string& id, const SkewCount& skew, const SkewCount& corner,
                           const Rational& eta);

// Certificates: {"kind":"uniform|increment|none",...} with the pipeline trace.
Json certificate_to_json(const DriverResult& res);

// Increment traces: ordered list of {witness, shifts, gain, sizes} plus the
// certificate with parameters and corpus hash.
Json trace_to_json(const FieldIncrementTrace& trace, const Json& params, std::uint64_t corpus_hash);
Json subspace_to_json(const Subspace& v);

// FNV-1a over a serialized instance; stable across runs.
std::uint64_t stable_hash(const std::string& s);

}  // namespace skewlab
