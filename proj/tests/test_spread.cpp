#include <doctest.h>

#include <cmath>

#include "skewlab/corpus.hpp"
#include "skewlab/spread.hpp"

using namespace skewlab;

namespace {

ColumnFamily full_columns(const AbelianGroup& g) {
    ColumnFamily fam(g);
    for (int x = 0; x < g.order(); ++x) fam.set_column(x, Subset::full(g));
    fam.freeze();
    return fam;
}

// Independent double-loop oracle: every subspace, every shift, densities by
// direct count.
bool oracle_spread(const ColumnFamily& fam, int r, const Rational& lambda) {
    const auto& g = fam.group();
    Rational base(0);
    for (int col = 0; col < g.order(); ++col)
        if (fam.index().contains(col))
            base += rat_pow(Rational(fam.column(col).size(), g.order()), 2);
    base *= lambda;
    bool spread = true;
    enumerate_subspaces(g.factors()[0], g.num_factors(), r, [&](const Subspace& v) {
        Rational lhs(0);
        for (int col = 0; col < g.order(); ++col) {
            if (!fam.index().contains(col)) continue;
            Rational best(0);
            for (int x = 0; x < g.order(); ++x) {
                int cnt = 0;
                for (int m = 0; m < g.order(); ++m)
                    if (v.members.contains(m) && fam.column(col).contains(g.add(m, x))) ++cnt;
                best = std::max(best, Rational(cnt, v.members.size()));
            }
            lhs += best * best;
        }
        if (lhs > base) spread = false;
    });
    return spread;
}

int smallest_d_sq(const ColumnFamily& fam) {
    Rational sum(0);
    for (int g = 0; g < fam.group().order(); ++g)
        if (fam.index().contains(g)) sum += rat_pow(Rational(fam.column(g).size()), 2);
    const Rational vol = rat_pow(Rational(fam.group().order()), 3);
    int d = 0;
    while (sum < vol * pow2_neg(d)) ++d;
    return d;
}

}  // namespace

TEST_CASE("simultaneous spreadness decisions") {
    const AbelianGroup g = vector_space_group(2, 4);

    // all columns full: certificate for any lambda > 1
    CHECK_FALSE(is_sim_spread(full_columns(g), 2, Rational(11, 10)).has_value());

    // all columns a fixed codim-1 subspace: violation at that subspace
    const auto subs = all_subspaces(2, 4, 1);
    const Subspace& w = subs[3];
    ColumnFamily fam(g);
    for (int x = 0; x < 16; ++x) fam.set_column(x, w.members);
    fam.freeze();
    const auto viol = is_sim_spread(fam, 1, Rational(3, 2));
    REQUIRE(viol.has_value());
    CHECK(viol->witness.dual_basis == w.dual_basis);
    for (int x = 0; x < 16; ++x)
        CHECK(coset_density(fam.column(x), viol->witness,
                            viol->shifts[static_cast<std::size_t>(x)]) == Rational(1));
    CHECK(viol->lhs > viol->rhs);

    // random families agree with the independent oracle
    Rng rng{41, 0};
    int violations = 0;
    for (int i = 0; i < 25; ++i) {
        const ColumnFamily rf = random_family(g, 0.8, 0.25 + 0.5 * rng.unit(), rng);
        const bool got = !is_sim_spread(rf, 2, Rational(3, 2)).has_value();
        CHECK(got == oracle_spread(rf, 2, Rational(3, 2)));
        if (!got) ++violations;
    }
    CHECK(violations > 0);

    CHECK_THROWS_AS(is_sim_spread(full_columns(g), 5, Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(is_sim_spread(full_columns(g), 1, Rational(1)), std::invalid_argument);
}

TEST_CASE("violations re-verify from raw data") {
    const AbelianGroup g = vector_space_group(3, 2);
    Rng rng{43, 0};
    for (int i = 0; i < 20; ++i) {
        const ColumnFamily fam = random_family(g, 0.8, 0.3, rng);
        const auto viol = is_sim_spread(fam, 1, Rational(6, 5));
        if (!viol) continue;
        Rational lhs(0);
        for (int col = 0; col < g.order(); ++col) {
            if (!fam.index().contains(col)) continue;
            lhs += rat_pow(coset_density(fam.column(col), viol->witness,
                                         viol->shifts[static_cast<std::size_t>(col)]),
                           2);
        }
        CHECK(lhs == viol->lhs);
        CHECK(lhs > viol->rhs);
    }
}

TEST_CASE("field density increment") {
    const Rational eps(1, 2);

    {  // already-spread family: zero iterations
        const AbelianGroup g = vector_space_group(2, 4);
        const ColumnFamily fam = full_columns(g);
        const auto trace = density_increment(fam, 2, eps, 1);
        CHECK(trace.steps.empty());
        CHECK(trace.certified);
        CHECK(trace.density_holds);
    }
    {  // every column a fixed codim-1 subspace of F_2^5: one step, densities double
        const AbelianGroup g = vector_space_group(2, 5);
        const Subspace w = all_subspaces(2, 5, 1)[4];
        ColumnFamily fam(g);
        for (int x = 0; x < 32; ++x) fam.set_column(x, w.members);
        fam.freeze();
        const auto trace = density_increment(fam, 1, eps, smallest_d_sq(fam));
        REQUIRE(trace.steps.size() == 1);
        CHECK(trace.final_dim == 4);
        // restricted densities double, so the squared-density potential quadruples
        CHECK(trace.steps[0].potential_after == 4 * trace.steps[0].potential_before);
        CHECK(trace.density_holds);
    }
    {  // random families in F_2^6
        Rng rng{47, 0};
        const AbelianGroup g = vector_space_group(2, 6);
        for (int i = 0; i < 6; ++i) {
            const ColumnFamily fam = random_family(g, 0.9, 0.5, rng);
            const int d = smallest_d_sq(fam);
            const auto trace = density_increment(fam, 1, eps, d);
            const int max_iters = static_cast<int>(std::ceil(d / std::log2(1.5))) + 1;
            CHECK(static_cast<int>(trace.steps.size()) <= max_iters);
            for (const auto& s : trace.steps)
                CHECK(s.potential_after > (Rational(1) + eps) * s.potential_before);
            CHECK(trace.density_holds);
            CHECK(oracle_spread(trace.final_family, std::min(1, trace.final_dim),
                                Rational(1) + eps));
        }
    }
    {  // density precondition
        const AbelianGroup g = vector_space_group(2, 4);
        ColumnFamily sparse(g);
        sparse.add_point(0, 0);
        sparse.freeze();
        CHECK_THROWS_AS(density_increment(sparse, 1, eps, 0), std::invalid_argument);
    }
}

TEST_CASE("bohr spreadness decision") {
    const AbelianGroup z60({60});
    const BohrSet whole = bohr_set(z60, {{0}}, 2.0);

    {  // columns all equal to the container: certificate
        ColumnFamily fam(z60);
        for (int x = 0; x < 60; ++x) fam.set_column(x, whole.members);
        fam.freeze();
        const auto cands = default_bohr_candidates(10)(whole);
        CHECK_FALSE(is_sim_spread_bohr(fam, whole, cands, 1, Rational(3, 2), 0.01).has_value());
    }
    {  // columns concentrated on a small candidate: violation there
        const BohrSet small = bohr_set(z60, {{30}}, 0.5);  // the even residues
        ColumnFamily fam(z60);
        for (int x = 0; x < 60; ++x) fam.set_column(x, small.members);
        fam.freeze();
        std::vector<std::string> skipped;
        const auto viol =
            is_sim_spread_bohr(fam, whole, {small}, 1, Rational(3, 2), 0.01, &skipped);
        REQUIRE(viol.has_value());
        CHECK(viol->lhs > viol->rhs);
        // re-verify from raw data
        Rational lhs(0);
        const auto memb = viol->witness.members.members();
        for (int col = 0; col < 60; ++col)
            lhs += rat_pow(Rational(fam.column(col).shifted_intersect_size(
                                        viol->shifts[static_cast<std::size_t>(col)], memb),
                                    viol->witness.size()),
                           2);
        CHECK(lhs == viol->lhs);
    }
    {  // offending candidates are skipped with diagnostics
        ColumnFamily fam(z60);
        for (int x = 0; x < 60; ++x) fam.set_column(x, whole.members);
        fam.freeze();
        const BohrSet not_sub = bohr_set(z60, {{7}}, 1.0);  // frequency set misses {0}
        std::vector<std::string> skipped;
        CHECK_FALSE(
            is_sim_spread_bohr(fam, whole, {not_sub}, 1, Rational(2), 0.01, &skipped).has_value());
        CHECK(skipped.size() == 1);
        CHECK_THROWS_AS(is_sim_spread_bohr(fam, whole, {}, 1, Rational(2), 0.01),
                        std::invalid_argument);
    }
}

TEST_CASE("bohr density increment on a concentrated family") {
    const AbelianGroup z101({101});
    const BohrSet whole = bohr_set(z101, {{0}}, 2.0);
    const BohrSet raw = bohr_set(z101, {{3}}, 0.8);
    const BohrSet target = dilate(raw, find_regular_dilate(raw));
    ColumnFamily fam(z101);
    for (int x = 0; x < 101; ++x) fam.set_column(x, target.members);
    fam.freeze();
    Rational sum(0);
    for (int x = 0; x < 101; ++x) sum += rat_pow(Rational(fam.column(x).size()), 2);
    int d = 0;
    while (sum < rat_pow(Rational(101), 3) * pow2_neg(d)) ++d;

    const auto trace = density_increment_bohr(fam, whole, 1, Rational(1, 2), 0.01, d,
                                              default_bohr_candidates(12));
    CHECK(trace.steps.size() >= 1);
    for (const auto& s : trace.steps) {
        CHECK(s.averaging.pass);
        CHECK(s.potential_after >= Rational(5, 4) * s.potential_before);
    }
    CHECK(trace.density_holds);
    // potential replay: after i steps, at least (1 + eps/2)^i 2^-d
    int i = 0;
    for (const auto& s : trace.steps) {
        ++i;
        CHECK(s.potential_after >= pow2_neg(d) * rat_pow(Rational(5, 4), i));
    }
}

TEST_CASE("infinity-norm consequence") {
    const AbelianGroup g = vector_space_group(2, 4);
    const Rational lambda(3, 2);

    {  // all columns full: value 1
        const ColumnFamily fam = full_columns(g);
        for (const auto& v : all_subspaces(2, 4, 2)) {
            const auto rep = check_infnorm_consequence(fam, v, lambda);
            CHECK(rep.pass);
            CHECK(rep.lhs == doctest::Approx(1.0));
        }
    }
    {  // single-column family: reduces to ||mu_A o mu_A * mu_V||_inf
        Rng rng{53, 0};
        ColumnFamily fam(g);
        const Subset a = random_nonempty_subset(g, 0.5, rng);
        fam.set_column(3, a);
        fam.freeze();
        const Subspace v = all_subspaces(2, 4, 2)[20];
        const RealFn mu_a = normalized_indicator_real(a);
        const double direct = lp_norm(
            convolve(diff_convolve(mu_a, mu_a), normalized_indicator_real(v.members)), kInfNorm);
        const auto rep = check_infnorm_consequence(fam, v, lambda);
        CHECK(rep.lhs == doctest::Approx(direct).epsilon(1e-12));
    }
    {  // spread-certified increment outputs satisfy the bound at every witness
        Rng rng{59, 0};
        for (int i = 0; i < 5; ++i) {
            ColumnFamily fam = random_family(g, 0.9, 0.45, rng);
            const auto trace = density_increment(fam, 2, Rational(1, 2), smallest_d_sq(fam));
            if (trace.final_dim == 0 || trace.final_family.total_points() == 0) continue;
            enumerate_subspaces(2, trace.final_dim, std::min(2, trace.final_dim),
                                [&](const Subspace& v) {
                                    CHECK(check_infnorm_consequence(trace.final_family, v,
                                                                    Rational(3, 2))
                                              .pass);
                                });
        }
    }
}
