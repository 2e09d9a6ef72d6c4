#include "skewlab/io.hpp"

#include <cstdio>

namespace skewlab {

namespace {

Json factors_of(const AbelianGroup& g) { return Json(g.factors()); }

AbelianGroup group_from(const Json& j) { return AbelianGroup(j.get<std::vector<int>>()); }

// Fixed-format doubles keep reports byte-stable across runs.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

Json fn_to_json(const RatFn& f) {
    Json vals = Json::array();
    for (const auto& v : f.v) vals.push_back(rat_to_string(v));
    return Json{{"factors", factors_of(f.group)}, {"kind", "rational"}, {"values", vals}};
}

Json fn_to_json(const RealFn& f) {
    return Json{{"factors", factors_of(f.group)}, {"kind", "real"}, {"values", f.v}};
}

Json fn_to_json(const CplxFn& f) {
    Json vals = Json::array();
    for (const auto& v : f.v) vals.push_back(Json::array({v.real(), v.imag()}));
    return Json{{"factors", factors_of(f.group)}, {"kind", "complex"}, {"values", vals}};
}

std::string fn_kind(const Json& j) { return j.at("kind").get<std::string>(); }

RatFn rat_fn_from_json(const Json& j) {
    if (fn_kind(j) != "rational") throw std::invalid_argument("expected rational kind");
    RatFn f(group_from(j.at("factors")));
    const auto& vals = j.at("values");
    if (static_cast<int>(vals.size()) != f.size())
        throw std::invalid_argument("value table length mismatch");
    for (int x = 0; x < f.size(); ++x) f[x] = rat_from_string(vals[static_cast<std::size_t>(x)].get<std::string>());
    return f;
}

RealFn real_fn_from_json(const Json& j) {
    if (fn_kind(j) != "real") throw std::invalid_argument("expected real kind");
    RealFn f(group_from(j.at("factors")));
    const auto& vals = j.at("values");
    if (static_cast<int>(vals.size()) != f.size())
        throw std::invalid_argument("value table length mismatch");
    for (int x = 0; x < f.size(); ++x) f[x] = vals[static_cast<std::size_t>(x)].get<double>();
    return f;
}

CplxFn cplx_fn_from_json(const Json& j) {
    if (fn_kind(j) != "complex") throw std::invalid_argument("expected complex kind");
    CplxFn f(group_from(j.at("factors")));
    const auto& vals = j.at("values");
    if (static_cast<int>(vals.size()) != f.size())
        throw std::invalid_argument("value table length mismatch");
    for (int x = 0; x < f.size(); ++x) {
        const auto& pair = vals[static_cast<std::size_t>(x)];
        f[x] = {pair[0].get<double>(), pair[1].get<double>()};
    }
    return f;
}

Json instance_to_json(const SkewInstance& inst) {
    if (inst.mode == InstanceMode::grid) {
        Json pts = Json::array();
        for (auto [x, y] : inst.grid.points) pts.push_back(Json::array({x, y}));
        return Json{{"mode", "grid"}, {"n", inst.grid.n}, {"points", pts}};
    }
    Json cols = Json::object();
    const auto& fam = inst.family;
    for (int g = 0; g < fam.group().order(); ++g) {
        if (!fam.index().contains(g)) continue;
        cols[std::to_string(g)] = fam.column(g).members();
    }
    return Json{{"mode", "group"}, {"factors", factors_of(fam.group())}, {"columns", cols}};
}

SkewInstance instance_from_json(const Json& j) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "grid") {
        GridSet grid;
        grid.n = j.at("n").get<int>();
        for (const auto& p : j.at("points")) grid.points.emplace_back(p[0].get<int>(), p[1].get<int>());
        return grid_instance(std::move(grid));
    }
    if (mode != "group") throw std::invalid_argument("instance: unknown mode " + mode);
    const AbelianGroup g = group_from(j.at("factors"));
    ColumnFamily fam(g);
    for (const auto& [key, ranks] : j.at("columns").items())
        fam.set_column(std::stoi(key), Subset::of(g, ranks.get<std::vector<int>>()));
    return group_instance(std::move(fam));
}

Json bohr_to_json(const BohrSet& b) {
    return Json{{"factors", factors_of(b.group)}, {"gamma", b.gamma}, {"phi", b.phi}};
}

BohrSet bohr_from_json(const Json& j) {
    return bohr_set(group_from(j.at("factors")), j.at("gamma").get<std::vector<std::vector<int>>>(),
                    j.at("phi").get<double>());
}

std::string check_csv_header() { return "check,instance,lhs,rhs,pass"; }

std::string check_csv_row(const CheckReport& rep, const std::string& instance) {
    return rep.check + "," + instance + "," + fmt(rep.lhs) + "," + fmt(rep.rhs) + "," +
           (rep.pass ? "1" : "0");
}

std::string counts_csv_header() { return "instance_id,total,nontrivial,corner_nontrivial,eta"; }

std::string counts_csv_row(const std::string& id, const SkewCount& skew, const SkewCount& corner,
                           const Rational& eta) {
    return id + "," + std::to_string(skew.total) + "," + std::to_string(skew.nontrivial) + "," +
           std::to_string(corner.nontrivial) + "," + rat_to_string(eta);
}

Json subspace_to_json(const Subspace& v) {
    return Json{{"p", v.p}, {"n", v.n}, {"codim", v.codim()}, {"dual_basis", v.dual_basis}};
}

Json certificate_to_json(const DriverResult& res) {
    Json trace = Json::array();
    for (const auto& step : res.trace)
        trace.push_back(Json{{"check", step.check},
                             {"lhs", fmt(step.lhs)},
                             {"rhs", fmt(step.rhs)},
                             {"pass", step.pass},
                             {"note", step.note}});
    Json out{{"trace", trace}};
    if (std::holds_alternative<UniformBranch>(res.cert)) {
        out["kind"] = "uniform";
        out["eta"] = rat_to_string(std::get<UniformBranch>(res.cert).eta);
    } else if (std::holds_alternative<IncrementCertificate>(res.cert)) {
        const auto& inc = std::get<IncrementCertificate>(res.cert);
        out["kind"] = "increment";
        out["witness"] = subspace_to_json(inc.witness);
        out["peak"] = fmt(inc.peak);
    } else {
        const auto& none = std::get<NoCertificate>(res.cert);
        out["kind"] = "none";
        out["reason"] = none.reason;
        out["peak"] = fmt(none.best_peak);
    }
    return out;
}

Json trace_to_json(const FieldIncrementTrace& trace, const Json& params, std::uint64_t corpus_hash) {
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        Json shifts = Json::array();
        for (int x : s.shifts) shifts.push_back(x);
        steps.push_back(Json{{"witness", subspace_to_json(s.witness)},
                             {"shifts", shifts},
                             {"slice_rep", s.slice_rep},
                             {"gain", rat_to_string(s.potential_after / s.potential_before)},
                             {"sizes", Json{{"ambient_dim", s.ambient_dim}}}});
    }
    return Json{{"steps", steps},
                {"final_dim", trace.final_dim},
                {"certified", trace.certified},
                {"final_sum_sq", rat_to_string(trace.final_sum_sq)},
                {"density_floor", rat_to_string(trace.density_floor)},
                {"params", params},
                {"corpus_hash", corpus_hash}};
}

std::uint64_t stable_hash(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace skewlab
