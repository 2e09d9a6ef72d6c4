#include "skewlab/spread.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skewlab {

namespace {

// The family's group must be F_p^n for prime p; returns (p, n).
std::pair<int, int> field_shape(const AbelianGroup& g) {
    const int p = g.factors()[0];
    for (int f : g.factors())
        if (f != p) throw std::invalid_argument("spread: group is not a prime-power vector space");
    auto prime = [](int q) {
        if (q < 2) return false;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) return false;
        return true;
    };
    if (g.num_factors() == 1 && p == 1) return {2, 0};  // trivial ambient
    if (!prime(p)) throw std::invalid_argument("spread: field order must be prime");
    return {p, g.num_factors()};
}

}  // namespace

std::optional<FieldViolation> is_sim_spread(const ColumnFamily& fam, int r, const Rational& lambda) {
    if (lambda <= 1) throw std::invalid_argument("is_sim_spread: lambda must exceed 1");
    const auto [p, n] = field_shape(fam.group());
    if (r > n) throw std::invalid_argument("is_sim_spread: r exceeds dimension");
    if (n == 0) return std::nullopt;
    const Rational base = lambda * fam.sum_sq_densities();

    std::optional<FieldViolation> hit;
    enumerate_subspaces(p, n, r, [&](const Subspace& v) {
        if (hit) return;
        const auto reps = coset_representatives(v);
        const auto memb = v.members.members();
        const Rational vol(v.members.size());
        Rational lhs(0);
        std::vector<int> shifts(static_cast<std::size_t>(fam.group().order()), 0);
        for (int g = 0; g < fam.group().order(); ++g) {
            if (!fam.index().contains(g)) continue;
            const Subset& col = fam.column(g);
            int best = -1;
            int best_x = 0;
            for (int x : reps) {
                const int cnt = col.shifted_intersect_size(x, memb);
                if (cnt > best) {
                    best = cnt;
                    best_x = x;
                }
            }
            shifts[static_cast<std::size_t>(g)] = best_x;
            lhs += rat_pow(Rational(best) / vol, 2);
        }
        if (lhs > base) hit = FieldViolation{v, std::move(shifts), lhs, base};
    });
    return hit;
}

std::optional<BohrViolation> is_sim_spread_bohr(const ColumnFamily& fam, const BohrSet& b,
                                                const std::vector<BohrSet>& candidates, int r,
                                                const Rational& lambda, double delta,
                                                std::vector<std::string>* skipped) {
    if (candidates.empty()) throw std::invalid_argument("is_sim_spread_bohr: empty candidate list");
    if (lambda <= 1) throw std::invalid_argument("is_sim_spread_bohr: lambda must exceed 1");
    const auto& g = fam.group();
    const Rational base = lambda * [&] {
        Rational s(0);
        for (int x = 0; x < g.order(); ++x)
            if (fam.index().contains(x)) s += rat_pow(Rational(fam.column(x).size(), b.size()), 2);
        return s;
    }();

    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        const BohrSet& bp = candidates[ci];
        auto skip = [&](const std::string& why) {
            if (skipped) skipped->push_back("candidate " + std::to_string(ci) + ": " + why);
        };
        if (!is_sub_bohr(bp, b)) {
            skip("not a sub-Bohr set");
            continue;
        }
        if (bp.rank() > b.rank() + r) {
            skip("rank budget exceeded");
            continue;
        }
        if (bp.size() < delta * b.size()) {
            skip("measure below delta");
            continue;
        }
        if (!is_regular(bp)) {
            skip("not regular");
            continue;
        }
        const auto memb = bp.members.members();
        Rational lhs(0);
        std::vector<int> shifts(static_cast<std::size_t>(g.order()), 0);
        for (int col = 0; col < g.order(); ++col) {
            if (!fam.index().contains(col)) continue;
            const Subset& a = fam.column(col);
            int best_cnt = -1;
            int best_x = 0;
            for (int x = 0; x < g.order(); ++x) {
                const int cnt = a.shifted_intersect_size(x, memb);
                if (cnt > best_cnt) {
                    best_cnt = cnt;
                    best_x = x;
                }
            }
            shifts[static_cast<std::size_t>(col)] = best_x;
            lhs += rat_pow(Rational(best_cnt, bp.size()), 2);
        }
        if (lhs > base) return BohrViolation{bp, std::move(shifts), lhs, base};
    }
    return std::nullopt;
}

namespace {

Rational potential(const ColumnFamily& fam) {
    const Rational n(fam.group().order());
    return fam.sum_sq_densities() / n;
}

// Map v in V (ambient rank) to its coordinates w.r.t. the canonical basis of
// V: with a reduced-echelon dual basis the free coordinates of v are exactly
// the basis coefficients.
std::vector<int> free_columns(const Subspace& v) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(v.n), false);
    for (const auto& row : v.dual_basis) {
        int j = 0;
        while (row[static_cast<std::size_t>(j)] == 0) ++j;
        is_pivot[static_cast<std::size_t>(j)] = true;
    }
    std::vector<int> free;
    for (int j = 0; j < v.n; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
    return free;
}

}  // namespace

FieldIncrementTrace density_increment(const ColumnFamily& fam, int r, const Rational& eps, int d) {
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("density_increment: eps outside (0,1)");
    if (d < 0) throw std::invalid_argument("density_increment: d must be >= 0");
    {
        const Rational floor = pow2_neg(d) * rat_pow(Rational(fam.group().order()), 3);
        Rational sum(0);
        for (int g = 0; g < fam.group().order(); ++g)
            if (fam.index().contains(g)) sum += rat_pow(Rational(fam.column(g).size()), 2);
        if (sum < floor)
            throw std::invalid_argument("density_increment: density precondition violated");
    }
    const Rational lambda = Rational(1) + eps;
    const int max_iters =
        static_cast<int>(std::ceil(d / std::log2(1.0 + to_double(eps)))) + 1;

    FieldIncrementTrace trace;
    ColumnFamily cur = fam;
    cur.freeze();
    auto [p, n] = field_shape(cur.group());

    while (true) {
        const int budget = std::min(r, n);
        auto viol = budget >= 1 ? is_sim_spread(cur, budget, lambda) : std::nullopt;
        if (!viol) break;
        if (static_cast<int>(trace.steps.size()) >= max_iters)
            throw std::runtime_error("density_increment: iteration budget exceeded (bug trap)");

        const auto& g = cur.group();
        const Subspace& v = viol->witness;
        // Restricted column sizes under the violating shifts.
        std::vector<long long> restricted(static_cast<std::size_t>(g.order()), 0);
        for (int col = 0; col < g.order(); ++col) {
            if (!cur.index().contains(col)) continue;
            const int x = viol->shifts[static_cast<std::size_t>(col)];
            restricted[static_cast<std::size_t>(col)] =
                cur.column(col).shifted(g.neg(x)).intersect_size(v.members);
        }
        // Choose the affine slice V + w with the largest squared-density mass.
        const auto reps = coset_representatives(v);
        int best_w = reps.front();
        Rational best_mass(-1);
        const Rational vol(v.members.size());
        for (int w : reps) {
            Rational mass(0);
            for (int m : v.members.members()) {
                const int col = g.add(m, w);
                mass += rat_pow(Rational(restricted[static_cast<std::size_t>(col)]) / vol, 2);
            }
            if (mass > best_mass) {
                best_mass = mass;
                best_w = w;
            }
        }
        // Averaged inequality, exact: mass(V + w*) > (1+eps) (|V|/|W|) sum_g (|A_g|/|W|)^2.
        const Rational avg_rhs =
            lambda * Rational(v.members.size(), g.order()) * cur.sum_sq_densities();
        if (!(best_mass > avg_rhs))
            throw std::runtime_error("density_increment: averaged slice fails (bug trap)");

        // Rebuild inside V, remapped onto F_p^(dim V). With a reduced-echelon
        // dual basis the free coordinates of a member of V are its
        // coefficients w.r.t. space_basis(v), so the down-map is a gather.
        const auto basis_cols = free_columns(v);
        const auto basis = space_basis(v);
        const int m = v.dim();
        const AbelianGroup sub = vector_space_group(p, m);
        auto down_rank = [&](int member) {
            if (m == 0) return 0;
            const auto c = g.coords(member);
            std::vector<int> down(basis_cols.size());
            for (std::size_t k = 0; k < basis_cols.size(); ++k)
                down[k] = c[static_cast<std::size_t>(basis_cols[k])];
            return sub.rank_of(down);
        };
        auto lift_rank = [&](int gp) {
            std::vector<int> lift(static_cast<std::size_t>(v.n), 0);
            if (m > 0) {
                const auto coef = sub.coords(gp);
                for (std::size_t k = 0; k < basis.size(); ++k)
                    for (int j = 0; j < v.n; ++j)
                        lift[static_cast<std::size_t>(j)] =
                            (lift[static_cast<std::size_t>(j)] +
                             coef[k] * basis[k][static_cast<std::size_t>(j)]) % p;
            }
            return g.rank_of(lift);
        };
        ColumnFamily next(sub);
        for (int gp = 0; gp < sub.order(); ++gp) {
            const int col_old = g.add(lift_rank(gp), best_w);
            Subset a(sub);
            if (cur.index().contains(col_old)) {
                const int x = viol->shifts[static_cast<std::size_t>(col_old)];
                const Subset cut = cur.column(col_old).shifted(g.neg(x)).intersect(v.members);
                for (int mem : cut.members()) a.insert(down_rank(mem));
            }
            next.set_column(gp, std::move(a));
        }
        next.freeze();

        FieldIncrementStep step;
        step.witness = v;
        step.shifts = viol->shifts;
        step.slice_rep = best_w;
        step.potential_before = potential(cur);
        step.potential_after = potential(next);
        step.ambient_dim = n;
        if (!(step.potential_after > (Rational(1) + eps) * step.potential_before))
            throw std::runtime_error("density_increment: per-step gain fails (bug trap)");
        trace.steps.push_back(std::move(step));

        cur = std::move(next);
        n = m;
    }

    trace.final_family = cur;
    trace.final_dim = n;
    trace.certified = true;
    Rational sum(0);
    for (int g = 0; g < cur.group().order(); ++g)
        if (cur.index().contains(g)) sum += rat_pow(Rational(cur.column(g).size()), 2);
    trace.final_sum_sq = sum;
    trace.density_floor = pow2_neg(d) * rat_pow(Rational(cur.group().order()), 3);
    trace.density_holds = trace.final_sum_sq >= trace.density_floor;
    return trace;
}

BohrCandidateGen default_bohr_candidates(int max_new_freqs) {
    return [max_new_freqs](const BohrSet& b) {
        std::vector<BohrSet> out;
        const auto& g = b.group;
        auto push = [&](const std::vector<std::vector<int>>& gamma, double width) {
            if (width <= 0) return;
            BohrSet cand = bohr_set(g, gamma, std::min(width, b.phi));
            const double rho = find_regular_dilate(cand);
            out.push_back(dilate(cand, rho));
        };
        // Pure dilates of b.
        for (double shrink : {1.0, 0.5, 0.25, 0.125}) push(b.gamma, b.phi * shrink);
        // Single-character extensions.
        int budget = max_new_freqs > 0 ? max_new_freqs : g.order() - 1;
        for (int t = 1; t < g.order() && budget > 0; ++t, --budget) {
            auto gamma = b.gamma;
            gamma.push_back(g.coords(t));
            for (double shrink : {1.0, 0.5, 0.25}) push(gamma, b.phi * shrink);
        }
        return out;
    };
}

BohrIncrementTrace density_increment_bohr(const ColumnFamily& fam, const BohrSet& ambient, int r,
                                          const Rational& eps, double delta, int d,
                                          const BohrCandidateGen& gen, const Constants& cfg) {
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("density_increment_bohr: eps outside (0,1)");
    const auto& g = fam.group();
    {
        Rational sum(0);
        for (int x = 0; x < g.order(); ++x)
            if (fam.index().contains(x)) sum += rat_pow(Rational(fam.column(x).size()), 2);
        if (sum < pow2_neg(d) * rat_pow(Rational(g.order()), 3))
            throw std::invalid_argument("density_increment_bohr: density precondition violated");
    }
    const Rational lambda = Rational(1) + eps;
    const Rational half_gain = Rational(1) + eps / 2;
    const double eps_d = to_double(eps);
    const int max_iters =
        static_cast<int>(std::ceil(d / std::log2(1.0 + eps_d / 2))) + 1;

    BohrIncrementTrace trace;
    ColumnFamily cur = fam;
    cur.freeze();
    BohrSet container = ambient;
    BohrSet index_bohr = ambient;  // C = (container_sigma) + w
    int index_shift = 0;
    double sigma = 1.0;

    while (true) {
        auto viol = is_sim_spread_bohr(cur, container, gen(container), r, lambda, delta);
        if (!viol) break;
        if (static_cast<int>(trace.steps.size()) >= max_iters)
            throw std::runtime_error("density_increment_bohr: iteration budget exceeded (bug trap)");

        const BohrSet& bp = viol->witness;
        // Restricted sizes and the slice weight f(g) = (|A'_g| / |B'|)^2.
        std::vector<Rational> f(static_cast<std::size_t>(g.order()), Rational(0));
        for (int col = 0; col < g.order(); ++col) {
            if (!cur.index().contains(col)) continue;
            const int x = viol->shifts[static_cast<std::size_t>(col)];
            const int cnt = cur.column(col).shifted(g.neg(x)).intersect_size(bp.members);
            f[static_cast<std::size_t>(col)] = rat_pow(Rational(cnt, bp.size()), 2);
        }

        double tau = cfg.tau_scale * eps_d * eps_d /
                     (std::max(1, r) * std::max(1, d) * std::exp2(d));
        tau = std::min(tau, 1.0);
        BohrSet narrowed = bp;
        CheckReport avg_rep;
        bool ok = false;
        double sigma_new = 0;
        for (int attempt = 0; attempt < 10 && !ok; ++attempt, tau /= 2) {
            // sigma' = c * sigma * tau with c in [1/2, 1] making the dilate regular.
            const BohrSet raw = dilate(bp, sigma * tau);
            const double c = find_regular_dilate(raw);
            narrowed = dilate(raw, c);
            sigma_new = sigma * tau * c;
            // <mu_C * mu_{B'_{sigma'}}, f> >= (1 - eps/4) <mu_C, f>
            Rational with_conv(0), plain(0);
            const auto index_members = cur.index().members();
            const auto window = narrowed.members.members();
            for (int col : index_members) {
                plain += f[static_cast<std::size_t>(col)];
                for (int h : window) with_conv += f[static_cast<std::size_t>(g.add(col, h))];
            }
            plain /= Rational(index_members.size());
            with_conv /= Rational(static_cast<long long>(index_members.size()) *
                                  static_cast<long long>(window.size()));
            avg_rep.check = "bohr_averaging";
            avg_rep.lhs = to_double(with_conv);
            avg_rep.rhs = (1.0 - eps_d / 4) * to_double(plain);
            avg_rep.pass = with_conv >= (Rational(1) - eps / 4) * plain;
            avg_rep.note = "tau=" + std::to_string(tau);
            ok = avg_rep.pass;
        }
        if (!ok)
            throw std::runtime_error(
                "density_increment_bohr: averaging inequality failed after tau retries");

        // Index shift achieving the (1 + eps/2) gain.
        const auto window = narrowed.members.members();
        int best_g = -1;
        Rational best_mass(-1);
        for (int col : cur.index().members()) {
            Rational mass(0);
            for (int h : window) mass += f[static_cast<std::size_t>(g.add(col, h))];
            mass /= Rational(window.size());
            if (mass > best_mass) {
                best_mass = mass;
                best_g = col;
            }
        }
        Rational old_pot(0);
        for (int col : cur.index().members())
            old_pot += rat_pow(Rational(cur.column(col).size(), container.size()), 2);
        old_pot /= Rational(cur.index().size());

        BohrIncrementStep step;
        step.witness = bp;
        step.shifts = viol->shifts;
        step.slice_rep = best_g;
        step.potential_before = old_pot;
        step.potential_after = best_mass;
        step.tau_used = tau * 2;  // value before the final post-loop halving
        step.averaging = avg_rep;
        if (!(best_mass >= half_gain * old_pot))
            throw std::runtime_error("density_increment_bohr: per-step gain fails (bug trap)");

        // Rebuild: container B', index (B'_{sigma'}) + g*.
        ColumnFamily next(g);
        for (int h : window) {
            const int col = g.add(h, best_g);
            Subset a(g);
            if (cur.index().contains(col)) {
                const int x = viol->shifts[static_cast<std::size_t>(col)];
                a = cur.column(col).shifted(g.neg(x)).intersect(bp.members);
            }
            next.set_column(col, std::move(a));
        }
        next.set_container(bp.members);
        next.freeze();

        trace.steps.push_back(std::move(step));
        cur = std::move(next);
        container = bp;
        index_bohr = narrowed;
        index_shift = best_g;
        sigma = sigma_new;
    }

    trace.final_family = cur;
    trace.final_container = container;
    trace.final_index_bohr = index_bohr;
    trace.final_index_shift = index_shift;
    trace.final_sigma = sigma;
    trace.certified = true;
    Rational sum(0);
    for (int x = 0; x < g.order(); ++x)
        if (cur.index().contains(x)) sum += rat_pow(Rational(cur.column(x).size()), 2);
    trace.final_sum_sq = sum;
    trace.density_floor = pow2_neg(d) * rat_pow(Rational(container.size()), 2) *
                          Rational(cur.index().size());
    trace.density_holds = trace.final_sum_sq >= trace.density_floor;
    return trace;
}

namespace {

RealFn self_correlation_sum(const ColumnFamily& fam) {
    RealFn f(fam.group());
    for (int g = 0; g < fam.group().order(); ++g) {
        if (!fam.index().contains(g) || fam.column(g).empty()) continue;
        const RealFn ind = indicator_fn<double>(fam.column(g));
        f = add(f, diff_convolve(ind, ind));
    }
    return f;
}

}  // namespace

CheckReport check_infnorm_consequence(const ColumnFamily& fam, const Subspace& w,
                                      const Rational& lambda) {
    const double alpha = to_double(fam.sum_sq_densities());
    if (alpha == 0) throw std::invalid_argument("check_infnorm_consequence: empty family");
    RealFn f = scale(self_correlation_sum(fam), 1.0 / alpha);
    CheckReport rep;
    rep.check = "infnorm_field";
    rep.lhs = lp_norm(convolve(f, normalized_indicator_real(w.members)), kInfNorm);
    rep.rhs = std::sqrt(to_double(lambda));
    rep.pass = rep.lhs <= rep.rhs + 1e-9;
    return rep;
}

CheckReport check_infnorm_consequence(const ColumnFamily& fam, const BohrSet& container,
                                      const BohrSet& w, const Rational& lambda) {
    const double alpha = to_double(fam.sum_sq_densities());
    if (alpha == 0) throw std::invalid_argument("check_infnorm_consequence: empty family");
    RealFn f = scale(self_correlation_sum(fam), 1.0 / alpha);
    CheckReport rep;
    rep.check = "infnorm_bohr";
    rep.lhs = lp_norm(convolve(f, normalized_indicator_real(w.members)), kInfNorm);
    rep.rhs = std::sqrt(to_double(lambda)) / container.measure();
    rep.pass = rep.lhs <= rep.rhs + 1e-9;
    return rep;
}

}  // namespace skewlab
