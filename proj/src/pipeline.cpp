#include "skewlab/pipeline.hpp"

#include "skewlab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skewlab {

namespace {

RatFn family_f_shifted(const ColumnFamily& fam) {  // F = sum 1_{A_g} o 1_{A_g+g}
    RatFn f(fam.group());
    for (int g = 0; g < fam.group().order(); ++g) {
        if (!fam.index().contains(g) || fam.column(g).empty()) continue;
        f = add(f, diff_convolve(indicator_fn<Rational>(fam.column(g)),
                                 indicator_fn<Rational>(fam.column(g).shifted(g))));
    }
    return f;
}

RatFn family_f_plain(const ColumnFamily& fam) {  // F' = sum 1_{A_g} o 1_{A_g}
    RatFn f(fam.group());
    for (int g = 0; g < fam.group().order(); ++g) {
        if (!fam.index().contains(g) || fam.column(g).empty()) continue;
        const RatFn ind = indicator_fn<Rational>(fam.column(g));
        f = add(f, diff_convolve(ind, ind));
    }
    return f;
}

}  // namespace

std::variant<UniformBranch, GapBranch> nonuniformity_gap(const ColumnFamily& fam, double eps, int d) {
    const auto& g = fam.group();
    const long long pts = fam.total_points();
    if (Rational(pts) * rat_pow(Rational(2), d) < rat_pow(Rational(g.order()), 2))
        throw std::invalid_argument("nonuniformity_gap: density precondition violated");
    const RatFn f = family_f_shifted(fam);
    const RatFn d_fn = fam.profile_fn();
    const Rational eta = inner_product(mean_normalize(f), mean_normalize(d_fn));
    if (to_double(rat_abs(eta - 1)) <= eps) return UniformBranch{eta};

    GapBranch out;
    out.eta = eta;
    out.p = std::max(1, d);
    const RatFn centered = add_const(mean_normalize(f), Rational(-1));
    out.gap = lp_norm(centered, out.p);
    out.mu_d_inf = to_double(linf_norm(mean_normalize(d_fn)));
    if (out.mu_d_inf > std::exp2(d) + 1e-9)
        throw std::runtime_error("nonuniformity_gap: ||mu_D||_inf exceeds 2^d (bug trap)");
    // Hoelder chain: eps < ||mu_f - 1||_p ||mu_D||_inf^(1/p), hence gap >= eps/2.
    if (!(eps < out.gap * std::pow(out.mu_d_inf, 1.0 / out.p) + 1e-12))
        throw std::runtime_error("nonuniformity_gap: Hoelder chain fails (bug trap)");
    if (out.gap < eps / 2 - 1e-12)
        throw std::runtime_error("nonuniformity_gap: gap below eps/2 (bug trap)");
    return out;
}

BohrFamily make_bohr_family(ColumnFamily fam, BohrSet R, double sigma) {
    BohrFamily bf;
    bf.C = dilate(R, sigma);
    bf.R = std::move(R);
    bf.sigma = sigma;
    if (!(fam.index() == bf.C.members))
        throw std::invalid_argument("make_bohr_family: index set must equal the dilate");
    for (int g = 0; g < fam.group().order(); ++g)
        if (fam.index().contains(g) && !fam.column(g).subset_of(bf.R.members))
            throw std::invalid_argument("make_bohr_family: column escapes R");
    fam.freeze();
    bf.fam = std::move(fam);
    return bf;
}

BohrGapReport nonuniformity_gap_bohr(const BohrFamily& bf, double eps, int d, const Constants& cfg) {
    const auto& g = bf.fam.group();
    const int r = bf.R.rank();
    BohrGapReport rep;
    rep.in_regime = bf.sigma <= cfg.c_sigma * eps / (r * std::exp2(d));
    if (!rep.in_regime) rep.note = "sigma outside regime; checks reported, not binding";

    const Rational muR_inv = Rational(g.order(), bf.R.size());
    const RatFn mu_r = normalized_indicator(bf.R.members);
    const RatFn mu_d = mean_normalize(bf.fam.profile_fn());

    // alpha and the per-column densities.
    Rational alpha(0);
    std::vector<Rational> ag(static_cast<std::size_t>(g.order()), Rational(0));
    for (int x = 0; x < g.order(); ++x) {
        if (!bf.fam.index().contains(x)) continue;
        ag[static_cast<std::size_t>(x)] = Rational(bf.fam.column(x).size(), g.order());
        alpha += ag[static_cast<std::size_t>(x)] * ag[static_cast<std::size_t>(x)];
    }
    if (alpha == 0) throw std::invalid_argument("nonuniformity_gap_bohr: empty family");

    const RatFn f = family_f_shifted(bf.fam);
    rep.eta = inner_product(scale(f, Rational(1) / alpha), mu_d);
    rep.branch1_dev = to_double(rat_abs(rep.eta - muR_inv));
    rep.branch1_bound = eps * to_double(muR_inv);

    // Centered expansion F_0 = F - (term2 sum) - (term3 sum) + (term4 sum),
    // with each correction's mu_D-correlation reported against (eps/16) mu(R)^-1.
    RatFn sum2(g), sum3(g), sum4(g);
    for (int x = 0; x < g.order(); ++x) {
        if (!bf.fam.index().contains(x) || ag[static_cast<std::size_t>(x)] == 0) continue;
        const RatFn ind = indicator_fn<Rational>(bf.fam.column(x));
        const RatFn ind_sh = indicator_fn<Rational>(bf.fam.column(x).shifted(x));
        const RatFn mu_r_sh = translate(mu_r, x);
        sum2 = add(sum2, scale(diff_convolve(ind, mu_r_sh), ag[static_cast<std::size_t>(x)]));
        sum3 = add(sum3, scale(diff_convolve(mu_r, ind_sh), ag[static_cast<std::size_t>(x)]));
        sum4 = add(sum4, scale(diff_convolve(mu_r, mu_r_sh),
                               rat_pow(ag[static_cast<std::size_t>(x)], 2)));
    }
    const Rational inv_alpha = Rational(1) / alpha;
    rep.term2 = to_double(rat_abs(inner_product(scale(sum2, inv_alpha), mu_d) - muR_inv));
    rep.term3 = to_double(rat_abs(inner_product(scale(sum3, inv_alpha), mu_d) - muR_inv));
    rep.term4 = to_double(rat_abs(inner_product(scale(sum4, inv_alpha), mu_d) - muR_inv));
    rep.term_bound = eps / 16 * to_double(muR_inv);
    rep.terms_ok = rep.term2 <= rep.term_bound + 1e-9 && rep.term3 <= rep.term_bound + 1e-9 &&
                   rep.term4 <= rep.term_bound + 1e-9;

    if (rep.branch1_dev <= rep.branch1_bound) {
        rep.uniform = true;
        return rep;
    }
    // Branch 2: even-p mu_C norm of (1/alpha) F_0.
    const RatFn f0 = add(sub(f, add(sum2, sum3)), sum4);
    int p = 2;
    while (std::exp2(static_cast<double>(d) / p) > 1.5) p += 2;
    rep.p = p;
    const RatFn mu_c = normalized_indicator(bf.C.members);
    rep.gap = lp_norm(scale(f0, inv_alpha), p, &mu_c);
    rep.gap_bound = eps / 2 * to_double(muR_inv);
    rep.gap_holds = rep.gap >= rep.gap_bound - 1e-9;
    return rep;
}

namespace {

std::pair<RealFn, RealFn> decoupling_sides(const std::vector<std::pair<int, RealFn>>& fs) {
    if (fs.empty()) throw std::invalid_argument("decoupling: empty collection");
    const AbelianGroup& g = fs.front().second.group;
    RealFn plain(g), shifted(g);
    for (const auto& [label, fg] : fs) {
        if (fg.group != g) throw std::invalid_argument("decoupling: group mismatch");
        plain = add(plain, diff_convolve(fg, fg));
        shifted = add(shifted, diff_convolve(fg, translate(fg, label)));
    }
    return {plain, shifted};
}

}  // namespace

std::pair<double, double> decoupling_check(const std::vector<std::pair<int, RealFn>>& fs, int p) {
    if (p < 2 || p % 2 != 0) throw std::invalid_argument("decoupling_check: p must be even");
    const auto [plain, shifted] = decoupling_sides(fs);
    const double lhs = lp_norm(plain, p);
    const double rhs = lp_norm(shifted, p);
    if (lhs < rhs - 1e-9) throw std::runtime_error("decoupling_check: inequality fails (bug trap)");
    return {lhs, rhs};
}

CheckReport shift_removal_check(const std::vector<std::pair<int, RealFn>>& fs, const BohrSet& b,
                                const BohrSet& bp, const BohrSet& bpp, int p, const Constants& cfg) {
    if (p < 2 || p % 2 != 0) throw std::invalid_argument("shift_removal_check: p must be even");
    if (!is_regular(b) || !is_regular(bp) || !is_regular(bpp))
        throw std::invalid_argument("shift_removal_check: regularity precondition violated");
    const double tau = cfg.c_shift / b.rank();
    const Subset window = dilate(b, tau).members;
    if (!bp.members.subset_of(window) || !bpp.members.subset_of(window))
        throw std::invalid_argument("shift_removal_check: B', B'' escape B_tau");
    const auto [plain, shifted] = decoupling_sides(fs);
    const RealFn mu_bp = normalized_indicator_real(bp.members);
    const RealFn mu_bpp = normalized_indicator_real(bpp.members);
    const RealFn nu = convolve(diff_convolve(mu_bp, mu_bp), diff_convolve(mu_bpp, mu_bpp));
    const RealFn mu_b = normalized_indicator_real(b.members);
    CheckReport rep;
    rep.check = "shift_removal";
    rep.lhs = lp_norm(plain, p, &nu);
    rep.rhs = lp_norm(shifted, p, &mu_b);
    rep.pass = rep.lhs >= rep.rhs / 2 - 1e-9;
    return rep;
}

int unbalance(const RealFn& f, const RealFn& nu, double eps, int p, const Constants& cfg) {
    if (!is_spectrally_nonneg(f)) throw std::invalid_argument("unbalance: f is not spectrally nonneg");
    if (!is_spectrally_nonneg(nu)) throw std::invalid_argument("unbalance: nu is not spectrally nonneg");
    if (!is_measure(nu)) throw std::invalid_argument("unbalance: nu is not a measure");
    if (lp_norm(f, p, &nu) < eps) throw std::invalid_argument("unbalance: ||f||_p(nu) below eps");
    const RealFn lifted = add_const(f, 1.0);
    const int pmax = std::max(p + 1, static_cast<int>(std::ceil(cfg.unbalance_budget * p / eps)));
    for (int pp = 1; pp <= pmax; ++pp)
        if (lp_norm(lifted, pp, &nu) >= 1 + eps / 2) return pp;
    throw std::runtime_error("unbalance: no p' within budget " + std::to_string(pmax) +
                             " (bug trap; ||f+1|| at budget = " +
                             std::to_string(lp_norm(lifted, pmax, &nu)) + ")");
}

namespace {

double correlation_against(const AbelianGroup& g, const Subset& m1, const Subset& m2,
                           const Subset& s) {
    const RealFn conv = diff_convolve(normalized_indicator_real(m1), normalized_indicator_real(m2));
    double acc = 0;
    for (int x = 0; x < g.order(); ++x)
        if (s.contains(x)) acc += conv[x];
    return acc / g.order();
}

}  // namespace

RobustWitness find_robust_witness(const ColumnFamily& fam, const Subset& b1, const Subset& b2,
                                  int p, double eps, double delta, int budget, Rng& rng) {
    const AbelianGroup& g = fam.group();
    if (b1.empty() || b2.empty()) throw std::invalid_argument("find_robust_witness: empty container");
    const RatFn f = family_f_plain(fam);
    if (mean(f) == 0) throw std::invalid_argument("find_robust_witness: empty family");
    const RatFn mu_f = mean_normalize(f);
    const RatFn nu = diff_convolve(normalized_indicator(b1), normalized_indicator(b2));

    LevelSet level;
    level.p = p;
    level.norm_value = lp_norm(mu_f, p, &nu);
    level.threshold = (1 - eps) * level.norm_value;
    level.s = Subset(g);
    for (int x = 0; x < g.order(); ++x)
        if (to_double(mu_f[x]) > level.threshold) level.s.insert(x);

    auto finish = [&](Subset m1, Subset m2, bool fallback) {
        RobustWitness w;
        w.correlation = correlation_against(g, m1, m2, level.s);
        w.pair.density1 = static_cast<double>(m1.size()) / b1.size();
        w.pair.density2 = static_cast<double>(m2.size()) / b2.size();
        w.pair.m1 = std::move(m1);
        w.pair.m2 = std::move(m2);
        w.level = level;
        w.from_fallback = fallback;
        return w;
    };
    // The full pair is already a valid witness when S swallows supp(nu).
    if (correlation_against(g, b1, b2, level.s) >= 1 - delta) return finish(b1, b2, false);

    // Dependent random choice in H = G x G, L = {0} x G. The collection
    // embeds as A = { (g, y) : y in A_g }; B_i' = {0} x B_i live inside L,
    // where rank arithmetic makes L-ranks equal G-ranks.
    std::vector<int> hf = g.factors();
    for (int x : g.factors()) hf.push_back(x);
    const AbelianGroup h(hf);
    Subset embedded(h);
    for (int col = 0; col < g.order(); ++col) {
        if (!fam.index().contains(col)) continue;
        for (int y : fam.column(col).members()) embedded.insert(col * g.order() + y);
    }
    const auto b1m = b1.members();
    const auto b2m = b2.members();
    int k = std::max(p, 1);
    while (std::pow(1 - eps, k) >= delta / 2 && k < 64) ++k;

    // Pair weights |(A + b1) cap (A + b2)|^k drive the tuple sampling.
    std::vector<std::pair<std::pair<int, int>, double>> weighted;
    double total_weight = 0;
    for (int x1 : b1m) {
        const Subset a1 = embedded.shifted(x1);
        for (int x2 : b2m) {
            const int isz = a1.intersect_size(embedded.shifted(x2));
            if (isz == 0) continue;
            const double w = std::pow(static_cast<double>(isz), k);
            weighted.push_back({{x1, x2}, w});
            total_weight += w;
        }
    }
    double best_corr = -1;
    for (int attempt = 0; attempt < budget && total_weight > 0; ++attempt) {
        double pick = rng.unit() * total_weight;
        std::pair<int, int> chosen = weighted.front().first;
        for (const auto& [pr, w] : weighted) {
            pick -= w;
            if (pick <= 0) {
                chosen = pr;
                break;
            }
        }
        const Subset pool = embedded.shifted(chosen.first).intersect(embedded.shifted(chosen.second));
        const auto pm = pool.members();
        Subset m1h(h), m2h(h);
        for (int x : b1m) m1h.insert(x);
        for (int x : b2m) m2h.insert(x);
        for (int i = 0; i < k; ++i) {
            const int w = pm[static_cast<std::size_t>(rng.below(pm.size()))];
            // keep b with w - b in A
            m1h = m1h.intersect(embedded.negated().shifted(w));
            m2h = m2h.intersect(embedded.negated().shifted(w));
        }
        if (m1h.empty() || m2h.empty()) continue;
        Subset m1(g), m2(g);
        for (int x : m1h.members()) m1.insert(x);  // L-ranks are G-ranks
        for (int x : m2h.members()) m2.insert(x);
        const double corr = correlation_against(g, m1, m2, level.s);
        best_corr = std::max(best_corr, corr);
        if (corr >= 1 - delta) return finish(std::move(m1), std::move(m2), false);
    }

    if (g.order() <= 16) {
        // Deterministic fallback: single-sample generated pairs, then
        // singleton pairs (b1, b2) with b2 - b1 in S, which exist whenever a
        // witness exists at all.
        for (int w = 0; w < h.order(); ++w) {
            const Subset cut = embedded.negated().shifted(w);
            Subset m1(g), m2(g);
            for (int x : b1m)
                if (cut.contains(x)) m1.insert(x);
            for (int x : b2m)
                if (cut.contains(x)) m2.insert(x);
            if (m1.empty() || m2.empty()) continue;
            const double corr = correlation_against(g, m1, m2, level.s);
            best_corr = std::max(best_corr, corr);
            if (corr >= 1 - delta) return finish(std::move(m1), std::move(m2), true);
        }
        for (int x1 : b1m) {
            for (int x2 : b2m) {
                if (!level.s.contains(g.sub(x2, x1))) continue;
                Subset m1(g), m2(g);
                m1.insert(x1);
                m2.insert(x2);
                return finish(std::move(m1), std::move(m2), true);
            }
        }
    }
    throw std::runtime_error("find_robust_witness: budget exhausted; best correlation " +
                             std::to_string(best_corr));
}

namespace {

std::optional<Subspace> ap_search_impl(const Subset& m1, const Subset& m2, const Subset& s,
                                       double eps, int max_codim, bool diff_form) {
    const AbelianGroup& g = m1.group();
    const int p = g.factors()[0];
    for (int f : g.factors())
        if (f != p) throw std::invalid_argument("almost_periodicity_search: not a prime-field group");
    const RealFn mm = diff_form
                          ? diff_convolve(normalized_indicator_real(m1), normalized_indicator_real(m2))
                          : convolve(normalized_indicator_real(m1), normalized_indicator_real(m2));
    const RealFn ind_s = indicator_fn<double>(s);
    const double base = inner_product(mm, ind_s);
    std::optional<Subspace> found;
    enumerate_subspaces(p, g.num_factors(), max_codim, [&](const Subspace& v) {
        if (found) return;
        const double conv = inner_product(convolve(normalized_indicator_real(v.members), mm), ind_s);
        if (std::abs(conv - base) <= eps) found = v;
    });
    return found;
}

}  // namespace

std::optional<Subspace> almost_periodicity_search(const Subset& m1, const Subset& m2, const Subset& s,
                                                  double eps, int max_codim) {
    return ap_search_impl(m1, m2, s, eps, max_codim, false);
}

std::optional<Subspace> almost_periodicity_search_diff(const Subset& m1, const Subset& m2,
                                                       const Subset& s, double eps, int max_codim) {
    // mu_M1 o mu_M2 = mu_M2 * mu_(-M1); run the * form on the substituted pair.
    return ap_search_impl(m2, m1.negated(), s, eps, max_codim, false);
}

APReport almost_periodicity_verify(const Subset& w, const Subset& m1, const Subset& m2,
                                   const Subset& s, double eps, const Subset* bohr_container) {
    APReport rep;
    const RealFn mm = diff_convolve(normalized_indicator_real(m1), normalized_indicator_real(m2));
    const RealFn ind_s = indicator_fn<double>(s);
    rep.base = inner_product(mm, ind_s);
    rep.conv = inner_product(convolve(normalized_indicator_real(w), mm), ind_s);
    rep.deviation = std::abs(rep.conv - rep.base);
    rep.pass = rep.deviation <= eps;
    if (bohr_container && s.size() > 2 * bohr_container->size())
        rep.note = "|S| exceeds 2|B|; outside the stated hypothesis";
    return rep;
}

DriverResult structure_vs_pseudorandomness(const ColumnFamily& fam, double eps, int d, int r_max,
                                           Rng& rng, const Constants& cfg) {
    const AbelianGroup& g = fam.group();
    DriverResult out;
    auto note = [&](std::string name, double lhs, double rhs, bool pass, std::string extra = "") {
        out.trace.push_back({std::move(name), lhs, rhs, pass, std::move(extra)});
    };

    // Branch (1), exact.
    const auto branch = nonuniformity_gap(fam, eps, d);
    if (std::holds_alternative<UniformBranch>(branch)) {
        out.cert = std::get<UniformBranch>(branch);
        return out;
    }
    const auto& gap = std::get<GapBranch>(branch);
    note("nonuniformity_gap", gap.gap, eps / 2, gap.gap >= eps / 2 - 1e-12,
         "p=" + std::to_string(gap.p));

    const RatFn fprime = family_f_plain(fam);
    const RealFn mu_fp = to_real(mean_normalize(fprime));

    // Instrumented pipeline at an even exponent.
    const int p_even = std::max(2, 2 * ((d + 1) / 2));
    std::optional<Subspace> pipeline_v;
    try {
        std::vector<std::pair<int, RealFn>> fs;
        for (int col = 0; col < g.order(); ++col) {
            if (!fam.index().contains(col)) continue;
            const double dens = static_cast<double>(fam.column(col).size()) / g.order();
            fs.emplace_back(col, add_const(indicator_fn<double>(fam.column(col)), -dens));
        }
        const auto [lhs, rhs] = decoupling_check(fs, p_even);
        note("decoupling", lhs, rhs, lhs >= rhs - 1e-9, "p=" + std::to_string(p_even));

        const RealFn centered = add_const(mu_fp, -1.0);
        const RealFn uniform = uniform_measure<double>(g);
        const int pp = unbalance(centered, uniform, eps / 2, p_even, cfg);
        const double lifted = lp_norm(add_const(centered, 1.0), pp, &uniform);
        note("unbalance", lifted, 1 + eps / 4, lifted >= 1 + eps / 4 - 1e-9,
             "p'=" + std::to_string(pp));

        const Subset full = Subset::full(g);
        auto witness = find_robust_witness(fam, full, full, pp, eps / 16, eps / 32, 64, rng);
        // Target level set S = { x : mu_F'(x) > 1 + eps/8 }; the witness's own
        // level set is at least this high, so its correlation transfers.
        Subset s_target(g);
        for (int x = 0; x < g.order(); ++x)
            if (mu_fp[x] > 1 + eps / 8) s_target.insert(x);
        const double corr =
            correlation_against(g, witness.pair.m1, witness.pair.m2, s_target);
        note("robust_witness", corr, 1 - eps / 32, corr >= 1 - eps / 32 - 1e-9);

        const auto v = almost_periodicity_search_diff(witness.pair.m1, witness.pair.m2, s_target,
                                                      eps / 32, r_max);
        if (v) {
            const APReport ap = almost_periodicity_verify(v->members, witness.pair.m1,
                                                          witness.pair.m2, s_target, eps / 32);
            note("almost_periodicity", ap.deviation, eps / 32, ap.pass,
                 "codim=" + std::to_string(v->codim()));
            const double chain_rhs = (1 + eps / 8) * (1 - eps / 16);
            note("final_chain", 1 + eps / 32, chain_rhs, 1 + eps / 32 <= chain_rhs);
            pipeline_v = v;
        } else {
            note("almost_periodicity", 0, eps / 32, false, "no subspace within r_max");
        }
    } catch (const std::exception& e) {
        note("pipeline_abort", 0, 0, false, e.what());
    }

    // Sound certification: direct peak evaluation, pipeline witness first,
    // then exhaustive scan.
    const double bound = 1 + eps / 32;
    auto peak_at = [&](const Subspace& v) {
        return lp_norm(convolve(mu_fp, normalized_indicator_real(v.members)), kInfNorm);
    };
    if (pipeline_v) {
        const double peak = peak_at(*pipeline_v);
        if (peak >= bound - 1e-12) {
            out.cert = IncrementCertificate{*pipeline_v, peak};
            return out;
        }
        note("pipeline_peak_rejected", peak, bound, false);
    }
    const int pfac = g.factors()[0];
    double best_peak = 0;
    std::optional<Subspace> best_v;
    enumerate_subspaces(pfac, g.num_factors(), std::min(r_max, g.num_factors()),
                        [&](const Subspace& v) {
                            if (best_v) return;
                            const double peak = peak_at(v);
                            best_peak = std::max(best_peak, peak);
                            if (peak >= bound - 1e-12) best_v = v;
                        });
    if (best_v) {
        out.cert = IncrementCertificate{*best_v, peak_at(*best_v)};
        return out;
    }
    out.cert = NoCertificate{"no subspace within r_max reaches 1 + eps/32", best_peak};
    return out;
}

CombiningReport verify_int_combining(const BohrFamily& bf, double eps, const BohrSet& b,
                                     const Constants& cfg) {
    CombiningReport rep;
    const auto& g = bf.fam.group();
    const double muR_inv = static_cast<double>(g.order()) / bf.R.size();
    const int r = bf.R.rank();
    const long long pts = bf.fam.total_points();
    const int dmin = pts > 0 ? std::max(
        0, static_cast<int>(std::ceil(-std::log2(static_cast<double>(pts) /
                                                 (static_cast<double>(bf.R.size()) *
                                                  bf.C.size())))))
                             : 0;
    rep.in_regime = bf.sigma <= cfg.c_sigma * eps / (r * std::exp2(dmin));

    const RatFn f = family_f_shifted(bf.fam);
    rep.eta = inner_product(mean_normalize(f), mean_normalize(bf.fam.profile_fn()));
    rep.branch1_dev = std::abs(to_double(rep.eta) - muR_inv);
    rep.branch1_bound = eps * muR_inv;
    rep.branch1_holds = rep.branch1_dev <= rep.branch1_bound;

    const RatFn fprime = family_f_plain(bf.fam);
    rep.peak = lp_norm(convolve(to_real(mean_normalize(fprime)),
                                normalized_indicator_real(b.members)),
                       kInfNorm);
    rep.branch2_bound = (1 + eps / 80) * muR_inv;
    rep.branch2_holds = rep.peak >= rep.branch2_bound - 1e-9;

    rep.chain_lhs = 1 + eps / 80;
    rep.chain_rhs = (1 - eps / 64) * (1 - eps / 32) * (1 + eps / 16);
    rep.chain_holds = rep.chain_lhs <= rep.chain_rhs;
    return rep;
}

}  // namespace skewlab
