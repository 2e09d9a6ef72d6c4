#include "skewlab/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "skewlab/corpus.hpp"
#include "skewlab/fourier.hpp"
#include "skewlab/io.hpp"
#include "skewlab/pipeline.hpp"
#include "skewlab/search.hpp"
#include "skewlab/spread.hpp"

namespace skewlab {

namespace {

struct Tally {
    int checked = 0;
    int failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failed++ == 0) first_failure = what;
    }

    CriterionResult result(int id, const std::string& name) const {
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.pass = failed == 0;
        r.detail = std::to_string(checked - failed) + "/" + std::to_string(checked);
        if (failed > 0) r.detail += " first_failure=" + first_failure;
        return r;
    }
};

ColumnFamily random_small_family(const AbelianGroup& g, Rng& rng) {
    return random_family(g, 0.3 + 0.5 * rng.unit(), 0.2 + 0.4 * rng.unit(), rng);
}

// ---- criterion 1 & 2: counting identity and normalized bound ------------

CriterionResult criterion_counting(std::uint64_t seed) {
    Tally t;
    Rng rng = Rng{seed, 0}.fork(1);
    const auto pool = small_group_pool();
    for (int i = 0; i < 200; ++i) {
        const auto& g = pool[i % pool.size()];
        ColumnFamily fam = random_small_family(g, rng);
        SkewInstance inst;
        inst.mode = InstanceMode::group;
        inst.family = fam;
        const auto brute = count_skew_corners_brute(inst);
        const Rational analytic = count_skew_corners_analytic(fam);
        t.expect(analytic == Rational(brute.total),
                 "analytic!=brute on " + g.describe() + " i=" + std::to_string(i));
    }
    return t.result(1, "counting_identity_oracle_equivalence");
}

CriterionResult criterion_normalized_bound(std::uint64_t seed) {
    Tally t;
    Rng rng = Rng{seed, 0}.fork(1);  // same corpus as criterion 1
    const auto pool = small_group_pool();
    for (int i = 0; i < 200; ++i) {
        const auto& g = pool[i % pool.size()];
        ColumnFamily fam = random_small_family(g, rng);
        const auto cd = normalized_corner_density(fam);
        t.expect(cd.bound_holds, "bound fails on " + g.describe() + " i=" + std::to_string(i));
    }
    return t.result(2, "normalized_count_bound");
}

// ---- criterion 3: shift and embedding invariance --------------------------

CriterionResult criterion_invariance(std::uint64_t seed) {
    Tally t;
    Rng rng = Rng{seed, 0}.fork(3);
    const auto pool = small_group_pool();
    for (int i = 0; i < 100; ++i) {
        const auto& g = pool[i % pool.size()];
        SkewInstance inst;
        inst.mode = InstanceMode::group;
        inst.family = random_small_family(g, rng);
        const auto before = count_skew_corners_brute(inst);
        const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order())));
        std::vector<int> b(static_cast<std::size_t>(g.order()));
        for (auto& v : b) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order())));
        const auto after = count_skew_corners_brute(shift_instance(inst, a, b));
        t.expect(before.total == after.total && before.nontrivial == after.nontrivial,
                 "shift changed counts i=" + std::to_string(i));
    }
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + static_cast<int>(rng.below(5));
        GridSet grid = random_grid(n, 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n * n))), rng);
        SkewInstance ginst = grid_instance(grid);
        const auto direct = count_skew_corners_brute(ginst);
        SkewInstance emb;
        emb.mode = InstanceMode::group;
        emb.family = embed_grid(grid);
        const auto embedded = count_skew_corners_brute(emb);
        t.expect(direct.nontrivial == embedded.nontrivial,
                 "embedding changed nontrivial count i=" + std::to_string(i));
    }
    return t.result(3, "shift_and_embedding_invariance");
}

// ---- criterion 4: harmonic analysis --------------------------------------

CriterionResult criterion_harmonic(std::uint64_t seed) {
    Tally t;
    Rng rng = Rng{seed, 0}.fork(4);
    for (const auto& g : harmonic_group_pool()) {
        for (int i = 0; i < 100; ++i) {
            const CplxFn f = random_cplx_fn(g, rng);
            // round trip
            const CplxFn back = inverse_fourier(fourier_transform(f));
            double worst = 0;
            for (int x = 0; x < g.order(); ++x) worst = std::max(worst, std::abs(back[x] - f[x]));
            t.expect(worst <= 1e-9, "round trip " + g.describe());
            if (i % 10 == 0) {  // fast path vs naive reference
                const DualFn fast = fourier_transform(f);
                const DualFn naive = fourier_transform_naive(f);
                double dev = 0;
                for (int x = 0; x < g.order(); ++x)
                    dev = std::max(dev, std::abs(fast[x] - naive[x]));
                t.expect(dev <= 1e-9, "fast!=naive " + g.describe());
            }
        }
        for (int i = 0; i < 100; ++i) {
            const RealFn f = random_real_fn(g, rng);
            const RealFn h = random_real_fn(g, rng);
            const DualFn fh = fourier_transform(f);
            const DualFn hh = fourier_transform(h);
            const DualFn ch = fourier_transform(convolve(f, h));
            const DualFn dh = fourier_transform(diff_convolve(f, f));
            double conv_dev = 0, diff_dev = 0;
            for (int x = 0; x < g.order(); ++x) {
                conv_dev = std::max(conv_dev, std::abs(ch[x] - fh[x] * hh[x]));
                diff_dev = std::max(diff_dev, std::abs(dh[x] - std::norm(fh[x])));
            }
            t.expect(conv_dev <= 1e-9, "convolution theorem " + g.describe());
            t.expect(diff_dev <= 1e-9, "difference convolution transform " + g.describe());
            // Plancherel
            std::complex<double> dual_sum = 0;
            for (int x = 0; x < g.order(); ++x) dual_sum += fh[x] * std::conj(hh[x]);
            t.expect(std::abs(inner_product(f, h) - dual_sum) <= 1e-9, "plancherel " + g.describe());
        }
        const int adjoint_reps = 100;
        for (int i = 0; i < adjoint_reps; ++i) {
            const RatFn f = random_rat_fn(g, rng);
            const RatFn h = random_rat_fn(g, rng);
            const RatFn k = random_rat_fn(g, rng);
            t.expect(inner_product(f, convolve(h, k)) == inner_product(diff_convolve(k, f), h),
                     "adjoint identity " + g.describe());
        }
    }
    return t.result(4, "harmonic_analysis_suite");
}

// ---- criterion 5: decoupling and shift removal -----------------------------

std::vector<std::pair<int, RealFn>> random_collection(const AbelianGroup& g, Rng& rng) {
    std::vector<std::pair<int, RealFn>> fs;
    const int count = 2 + static_cast<int>(rng.below(4));
    for (int i = 0; i < count; ++i)
        fs.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order()))),
                        random_real_fn(g, rng));
    return fs;
}

// Kernel-style Bohr sets over Z/60 give wide sets at arbitrarily narrow
// widths, so the tau <= c/rk regime stays non-degenerate.
BohrSet kernel_bohr_60(const std::vector<int>& freqs, double phi) {
    std::vector<std::vector<int>> gamma;
    for (int f : freqs) gamma.push_back({f});
    return bohr_set(AbelianGroup({60}), gamma, phi);
}

CriterionResult criterion_decoupling(std::uint64_t seed, const Constants& cfg) {
    Tally t;
    Rng rng = Rng{seed, 0}.fork(5);
    const auto pool = small_group_pool();
    for (int i = 0; i < 500; ++i) {
        const auto& g = pool[i % pool.size()];
        const auto fs = random_collection(g, rng);
        for (int p : {2, 4}) {
            const auto [lhs, rhs] = decoupling_check(fs, p);
            t.expect(lhs >= rhs - 1e-9, "decoupling p=" + std::to_string(p));
        }
    }
    const BohrSet b = kernel_bohr_60({30}, 0.5);
    const BohrSet bp = kernel_bohr_60({30, 20}, 0.4);
    const BohrSet bpp = kernel_bohr_60({30, 12}, 0.4);
    for (int i = 0; i < 100; ++i) {
        const auto fs = random_collection(b.group, rng);
        const auto rep = shift_removal_check(fs, b, bp, bpp, 2, cfg);
        t.expect(rep.pass, "shift removal i=" + std::to_string(i));
    }
    return t.result(5, "decoupling_and_shift_removal");
}

// ---- criterion 6: Bohr suite ----------------------------------------------

CriterionResult criterion_bohr(std::uint64_t seed, const Constants& cfg) {
    Tally t;
    Rng rng = Rng{seed, 0}.fork(6);
    for (int i = 0; i < 100; ++i) {
        const int modulus = 50 + static_cast<int>(rng.below(351));
        const BohrSet b = random_bohr(modulus, 3, rng);
        t.expect(is_regular(b) == is_regular_grid_oracle(b),
                 "regularity decision disagrees i=" + std::to_string(i));
        double rho_reg = 1.0;
        try {
            rho_reg = find_regular_dilate(b);
        } catch (const std::exception&) {
            t.expect(false, "find_regular_dilate failed i=" + std::to_string(i));
            continue;
        }
        for (double rho : {1.0 / 3, 0.5, 2.0 / 3})
            t.expect(check_size_bound(b, rho).pass, "size bound i=" + std::to_string(i));
        const BohrSet reg = dilate(b, rho_reg);
        t.expect(is_regular(reg) == is_regular_grid_oracle(reg),
                 "regularity decision disagrees on dilate i=" + std::to_string(i));
        const double rho = 1.0 / (150.0 * reg.rank());
        const RealFn nu = normalized_indicator_real(dilate(reg, rho).members);
        t.expect(check_domination(reg, nu, rho, cfg).pass, "domination i=" + std::to_string(i));
        t.expect(check_l1_smoothing(reg, nu, rho, cfg).pass, "l1 smoothing i=" + std::to_string(i));
    }
    return t.result(6, "bohr_suite");
}

// ---- criterion 7: field density increment ----------------------------------

int smallest_d_for_sq(const ColumnFamily& fam) {
    Rational sum(0);
    for (int g = 0; g < fam.group().order(); ++g)
        if (fam.index().contains(g)) sum += rat_pow(Rational(fam.column(g).size()), 2);
    const Rational vol = rat_pow(Rational(fam.group().order()), 3);
    int d = 0;
    while (sum < vol * pow2_neg(d) && d < 62) ++d;
    return d;
}

// Independent spreadness oracle over F_2^n, n <= 6: every annihilator tuple
// (not just echelon bases), deduplicated by member mask, every shift (not
// just coset representatives), bitmask counting, integer cross-multiplied
// comparison. Shares nothing with the implementation path.
bool oracle_is_spread(const ColumnFamily& fam, int r, const Rational& lambda) {
    const auto& g = fam.group();
    const int n = g.num_factors();
    const int order = g.order();
    if (order > 64) throw std::logic_error("oracle_is_spread: group too large");
    // Columns as masks, with all shifted variants precomputed.
    std::vector<std::uint64_t> colmask(static_cast<std::size_t>(order), 0);
    long long sum_sq = 0;
    for (int col = 0; col < order; ++col) {
        if (!fam.index().contains(col)) continue;
        for (int y = 0; y < order; ++y)
            if (fam.column(col).contains(y)) colmask[static_cast<std::size_t>(col)] |= 1ull << y;
        const long long sz = fam.column(col).size();
        sum_sq += sz * sz;
    }
    // shifted[col][x] bit m = 1 iff m + x in A_col  (i.e. the mask of A_col - x)
    std::vector<std::vector<std::uint64_t>> shifted(static_cast<std::size_t>(order),
                                                    std::vector<std::uint64_t>(static_cast<std::size_t>(order), 0));
    for (int col = 0; col < order; ++col) {
        if (!colmask[static_cast<std::size_t>(col)]) continue;
        for (int x = 0; x < order; ++x)
            for (int m = 0; m < order; ++m)
                if (colmask[static_cast<std::size_t>(col)] >> g.add(m, x) & 1)
                    shifted[static_cast<std::size_t>(col)][static_cast<std::size_t>(x)] |= 1ull << m;
    }
    const long long lam_num = boost::multiprecision::numerator(lambda).convert_to<long long>();
    const long long lam_den = boost::multiprecision::denominator(lambda).convert_to<long long>();

    std::map<std::uint64_t, bool> seen;
    long long tuples = 1;
    for (int i = 0; i < r; ++i) tuples *= order;
    for (long long code = 0; code < tuples; ++code) {
        std::uint64_t vmask = 0;
        for (int x = 0; x < order; ++x) {
            long long c = code;
            bool in = true;
            for (int i = 0; i < r; ++i) {
                const int row = static_cast<int>(c % order);
                c /= order;
                // F_2 dot product via rank parity
                if (__builtin_popcount(static_cast<unsigned>(row & x)) & 1) {
                    in = false;
                    break;
                }
            }
            if (in) vmask |= 1ull << x;
        }
        if (__builtin_popcountll(vmask) < (order >> r)) continue;  // annihilator rank above r
        if (!seen.emplace(vmask, true).second) continue;
        const long long vol = __builtin_popcountll(vmask);
        long long lhs = 0;  // sum of best counts squared
        for (int col = 0; col < order; ++col) {
            if (!colmask[static_cast<std::size_t>(col)]) continue;
            int best = 0;
            for (int x = 0; x < order; ++x)
                best = std::max(best, __builtin_popcountll(
                                          shifted[static_cast<std::size_t>(col)][static_cast<std::size_t>(x)] & vmask));
            lhs += static_cast<long long>(best) * best;
        }
        // sum (best/vol)^2 > lambda sum (sz/order)^2
        const __int128 l = static_cast<__int128>(lhs) * order * order * lam_den;
        const __int128 rhs = static_cast<__int128>(lam_num) * sum_sq * vol * vol;
        if (l > rhs) return false;
    }
    (void)n;
    return true;
}

CriterionResult criterion_increment(std::uint64_t seed) {
    Tally t;
    Rng rng = Rng{seed, 0}.fork(7);
    const Rational eps(1, 2);
    for (int i = 0; i < 100; ++i) {
        const int n = 5 + static_cast<int>(rng.below(2));
        const int r = 1 + static_cast<int>(rng.below(2));
        const AbelianGroup g = vector_space_group(2, n);
        ColumnFamily fam(g);
        if (i < 50) {
            // engineered: every column a shifted fixed codim-1 or codim-2 subspace
            const auto subs = all_subspaces(2, n, r);
            const Subspace& w = subs[1 + rng.below(subs.size() - 1)];
            for (int col = 0; col < g.order(); ++col)
                fam.set_column(col, w.members.shifted(static_cast<int>(rng.below(
                                        static_cast<std::uint64_t>(g.order())))));
        } else {
            fam = random_family(g, 0.9, 0.4 + 0.3 * rng.unit(), rng);
        }
        fam.freeze();
        const int d = smallest_d_for_sq(fam);
        FieldIncrementTrace trace;
        try {
            trace = density_increment(fam, r, eps, d);
        } catch (const std::exception& e) {
            t.expect(false, std::string("increment threw: ") + e.what());
            continue;
        }
        const int max_iters = static_cast<int>(std::ceil(d / std::log2(1.5))) + 1;
        t.expect(static_cast<int>(trace.steps.size()) <= max_iters, "iteration bound");
        for (const auto& step : trace.steps)
            t.expect(step.potential_after > (Rational(1) + eps) * step.potential_before,
                     "per-step gain");
        t.expect(trace.density_holds, "conclusion (2) density floor");
        t.expect(oracle_is_spread(trace.final_family, std::min(r, trace.final_dim), Rational(1) + eps),
                 "exhaustive oracle rejects certificate i=" + std::to_string(i));
    }
    return t.result(7, "field_density_increment");
}

// ---- criterion 8: infinity-norm consequence ---------------------------------

CriterionResult criterion_infnorm(std::uint64_t seed, const Constants& cfg) {
    Tally t;
    Rng rng = Rng{seed, 0}.fork(8);
    const Rational lambda(3, 2);
    for (int i = 0; i < 25; ++i) {
        const AbelianGroup g = vector_space_group(2, 5);
        ColumnFamily fam = random_family(g, 0.9, 0.4, rng);
        const int d = smallest_d_for_sq(fam);
        const auto trace = density_increment(fam, 2, Rational(1, 2), d);
        const auto& fin = trace.final_family;
        const int r = std::min(2, trace.final_dim);
        if (fin.total_points() == 0) continue;
        enumerate_subspaces(2, trace.final_dim, r, [&](const Subspace& v) {
            t.expect(check_infnorm_consequence(fin, v, lambda).pass,
                     "field infnorm i=" + std::to_string(i));
        });
    }
    // Bohr side: certified relative to a candidate family over Z/60.
    for (int i = 0; i < 10; ++i) {
        const BohrSet b = kernel_bohr_60({30}, 0.9);
        const AbelianGroup& g = b.group;
        ColumnFamily fam(g);
        for (int col : dilate(b, 0.5).members.members()) {
            Subset a(g);
            for (int m : b.members.members())
                if (rng.coin(0.8)) a.insert(m);
            if (a.empty()) a.insert(0);
            fam.set_column(col, std::move(a));
        }
        fam.freeze();
        const auto candidates = default_bohr_candidates(8)(b);
        const Rational lam(2);
        const auto viol = is_sim_spread_bohr(fam, b, candidates, 1, lam, 0.05);
        if (viol) continue;  // only certified families are in scope here
        for (const auto& cand : candidates) {
            if (!is_sub_bohr(cand, b) || cand.rank() > b.rank() + 1 ||
                cand.size() < 0.05 * b.size() || !is_regular(cand))
                continue;
            t.expect(check_infnorm_consequence(fam, b, cand, lam).pass,
                     "bohr infnorm i=" + std::to_string(i));
        }
    }
    (void)cfg;
    return t.result(8, "infinity_norm_consequence");
}

// ---- criterion 9 & 10: driver and black boxes -------------------------------

int smallest_d_for_sum(const ColumnFamily& fam) {
    const Rational sum(fam.total_points());
    const Rational vol = rat_pow(Rational(fam.group().order()), 2);
    int d = 0;
    while (sum < vol * pow2_neg(d) && d < 62) ++d;
    return d;
}

CriterionResult criterion_driver(std::uint64_t seed, const Constants& cfg) {
    Tally t;
    Rng rng = Rng{seed, 0}.fork(9);
    const double eps = 0.5;
    const AbelianGroup g = vector_space_group(2, 4);

    {  // full-column fixture
        ColumnFamily full(g);
        for (int col = 0; col < g.order(); ++col) full.set_column(col, Subset::full(g));
        full.freeze();
        Rng r2 = rng.fork(1000);
        const auto res = structure_vs_pseudorandomness(full, eps, 1, 2, r2, cfg);
        t.expect(std::holds_alternative<UniformBranch>(res.cert) &&
                     std::get<UniformBranch>(res.cert).eta == Rational(1),
                 "full columns must be uniform with eta=1");
    }
    for (int i = 0; i < 100; ++i) {
        ColumnFamily fam = random_family(g, 0.85, 0.3 + 0.5 * rng.unit(), rng);
        const int d = smallest_d_for_sum(fam);
        Rng r2 = rng.fork(2000 + static_cast<std::uint64_t>(i));
        DriverResult res;
        try {
            res = structure_vs_pseudorandomness(fam, eps, d, 2, r2, cfg);
        } catch (const std::exception& e) {
            t.expect(false, std::string("driver threw: ") + e.what());
            continue;
        }
        // Independent verification of whichever certificate came back.
        const RatFn f = [&] {
            RatFn acc(g);
            for (int col = 0; col < g.order(); ++col) {
                if (!fam.index().contains(col) || fam.column(col).empty()) continue;
                acc = add(acc, diff_convolve(indicator_fn<Rational>(fam.column(col)),
                                             indicator_fn<Rational>(fam.column(col).shifted(col))));
            }
            return acc;
        }();
        const RatFn fp = [&] {
            RatFn acc(g);
            for (int col = 0; col < g.order(); ++col) {
                if (!fam.index().contains(col) || fam.column(col).empty()) continue;
                const RatFn ind = indicator_fn<Rational>(fam.column(col));
                acc = add(acc, diff_convolve(ind, ind));
            }
            return acc;
        }();
        const RealFn mu_fp = to_real(mean_normalize(fp));
        double best_peak = 0;
        enumerate_subspaces(2, 4, 2, [&](const Subspace& v) {
            best_peak = std::max(
                best_peak, lp_norm(convolve(mu_fp, normalized_indicator_real(v.members)), kInfNorm));
        });
        if (std::holds_alternative<UniformBranch>(res.cert)) {
            const Rational eta = std::get<UniformBranch>(res.cert).eta;
            t.expect(eta == inner_product(mean_normalize(f), mean_normalize(fam.profile_fn())) &&
                         to_double(rat_abs(eta - 1)) <= eps,
                     "uniform certificate fails recheck");
        } else if (std::holds_alternative<IncrementCertificate>(res.cert)) {
            const auto& inc = std::get<IncrementCertificate>(res.cert);
            const double peak =
                lp_norm(convolve(mu_fp, normalized_indicator_real(inc.witness.members)), kInfNorm);
            t.expect(peak >= 1 + eps / 32 - 1e-9 && inc.witness.codim() <= 2,
                     "increment certificate fails recheck");
        } else {
            t.expect(best_peak < 1 + eps / 32 - 1e-12,
                     "driver returned none but exhaustive search finds a witness");
        }
    }
    return t.result(9, "driver_soundness_and_budget_completeness");
}

CriterionResult criterion_blackboxes(std::uint64_t seed, const Constants& cfg) {
    Tally t;
    Rng rng = Rng{seed, 0}.fork(10);
    const auto pool = small_group_pool();
    for (int i = 0; i < 40; ++i) {
        const auto& g = pool[i % pool.size()];
        ColumnFamily fam = random_family(g, 0.8, 0.5, rng);
        const Subset full = Subset::full(g);
        Rng r2 = rng.fork(static_cast<std::uint64_t>(i));
        // budget 0 forces the deterministic exhaustive fallback (|G| <= 16).
        try {
            const auto w = find_robust_witness(fam, full, full, 2, 0.25, 0.125, 0, r2);
            const double corr = [&] {
                const RealFn conv = diff_convolve(normalized_indicator_real(w.pair.m1),
                                                  normalized_indicator_real(w.pair.m2));
                double acc = 0;
                for (int x = 0; x < g.order(); ++x)
                    if (w.level.s.contains(x)) acc += conv[x];
                return acc / g.order();
            }();
            t.expect(corr >= 1 - 0.125 - 1e-12, "witness correlation recheck");
            t.expect(w.pair.m1.subset_of(full) && w.pair.m2.subset_of(full) &&
                         !w.pair.m1.empty() && !w.pair.m2.empty(),
                     "witness containment");
        } catch (const std::exception& e) {
            t.expect(false, std::string("fallback failed: ") + e.what());
        }
    }
    for (int i = 0; i < 40; ++i) {
        const auto& g = pool[i % pool.size()];
        const Subset a = random_nonempty_subset(g, 0.4, rng);
        const RealFn mu_a = normalized_indicator_real(a);
        const RealFn f = add_const(diff_convolve(mu_a, mu_a), -1.0);
        const RealFn uniform = uniform_measure<double>(g);
        const double eps = 0.25;
        if (lp_norm(f, 2, &uniform) < eps) continue;
        try {
            const int pp = unbalance(f, uniform, eps, 2, cfg);
            t.expect(lp_norm(add_const(f, 1.0), pp, &uniform) >= 1 + eps / 2 - 1e-12,
                     "unbalance recheck");
        } catch (const std::exception& e) {
            t.expect(false, std::string("unbalance failed: ") + e.what());
        }
    }
    for (int i = 0; i < 40; ++i) {
        const AbelianGroup g = vector_space_group(2, 5);
        const Subset m1 = random_nonempty_subset(g, 0.4, rng);
        const Subset m2 = random_nonempty_subset(g, 0.4, rng);
        const Subset s = random_nonempty_subset(g, 0.5, rng);
        const auto v = almost_periodicity_search(m1, m2, s, 0.1, 3);
        if (!v) continue;
        const RealFn mm = convolve(normalized_indicator_real(m1), normalized_indicator_real(m2));
        const double base = inner_product(mm, indicator_fn<double>(s));
        const double conv =
            inner_product(convolve(normalized_indicator_real(v->members), mm), indicator_fn<double>(s));
        t.expect(std::abs(conv - base) <= 0.1 + 1e-12, "almost periodicity recheck");
    }
    return t.result(10, "contract_checked_black_boxes");
}

// ---- criterion 11: ground-truth table ---------------------------------------

CriterionResult criterion_search(std::uint64_t seed) {
    Tally t;
    // Frozen from the completed exhaustive/branch-and-bound search (the
    // derived oracle); see tests/test_search.cpp for the independent
    // subset-enumeration oracle at n <= 3.
    const int expected[] = {0, 1, 2, 4, 6};
    for (int n = 1; n <= 4; ++n) {
        const auto res = exact_max_scf_grid(n);
        t.expect(res.optimal, "search incomplete n=" + std::to_string(n));
        t.expect(res.best_size == expected[n],
                 "regression value n=" + std::to_string(n) + " got " + std::to_string(res.best_size));
        GridSet wit;
        wit.n = n;
        wit.points = res.witness;
        t.expect(verify_scf(grid_instance(wit)), "witness fails verify_scf n=" + std::to_string(n));
    }
    Rng rng = Rng{seed, 0}.fork(11);
    for (int n = 1; n <= 20; ++n) {
        const auto res = greedy_scf_grid(n, rng.next());
        t.expect(res.best_size >= n, "greedy below n=" + std::to_string(n));
        GridSet wit;
        wit.n = n;
        wit.points = res.witness;
        t.expect(verify_scf(grid_instance(wit)), "greedy witness fails verify n=" + std::to_string(n));
    }
    return t.result(11, "ground_truth_table");
}

std::string render(const std::vector<CriterionResult>& rs) {
    std::ostringstream os;
    os << "criterion,id,pass,detail\n";
    for (const auto& r : rs)
        os << r.name << "," << r.id << "," << (r.pass ? "PASS" : "FAIL") << "," << r.detail << "\n";
    return os.str();
}

std::vector<CriterionResult> run_criteria_1_to_11(std::uint64_t seed, const Constants& cfg) {
    std::vector<CriterionResult> rs;
    rs.push_back(criterion_counting(seed));
    rs.push_back(criterion_normalized_bound(seed));
    rs.push_back(criterion_invariance(seed));
    rs.push_back(criterion_harmonic(seed));
    rs.push_back(criterion_decoupling(seed, cfg));
    rs.push_back(criterion_bohr(seed, cfg));
    rs.push_back(criterion_increment(seed));
    rs.push_back(criterion_infnorm(seed, cfg));
    rs.push_back(criterion_driver(seed, cfg));
    rs.push_back(criterion_blackboxes(seed, cfg));
    rs.push_back(criterion_search(seed));
    return rs;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const Constants& cfg) {
    auto rs = run_criteria_1_to_11(seed, cfg);
    // Criterion 12: two independent passes over the same seed must render
    // byte-identical reports.
    const std::string again = render(run_criteria_1_to_11(seed, cfg));
    CriterionResult det;
    det.id = 12;
    det.name = "determinism";
    det.pass = render(rs) == again;
    det.detail = det.pass ? "reports byte-identical" : "reports differ";
    rs.push_back(det);
    return rs;
}

std::string build_suite_report(std::uint64_t seed, const Constants& cfg) {
    return render(run_acceptance(seed, cfg));
}

}  // namespace skewlab
