#include <doctest.h>

#include <map>
#include <set>

#include "skewlab/corpus.hpp"
#include "skewlab/subspaces.hpp"

using namespace skewlab;

namespace {

// Gaussian binomial [n choose r]_p by the product formula, as the counting
// oracle for the enumeration.
long long gaussian_binomial(int p, int n, int r) {
    long long num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        long long pn = 1, pr = 1;
        for (int k = 0; k < n - i; ++k) pn *= p;
        for (int k = 0; k < r - i; ++k) pr *= p;
        num *= pn - 1;
        den *= pr - 1;
    }
    return num / den;
}

}  // namespace

TEST_CASE("enumeration counts match Gaussian binomials") {
    CHECK(gaussian_binomial(2, 3, 1) == 7);
    CHECK(gaussian_binomial(3, 2, 1) == 4);

    const std::vector<std::pair<int, int>> shapes{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                  {2, 7}, {2, 8}, {3, 1}, {3, 2}, {3, 3}, {3, 4},
                                                  {3, 5}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2},
                                                  {11, 2}, {13, 2}};
    for (auto [p, n] : shapes) {
        long long order = 1;
        for (int i = 0; i < n; ++i) order *= p;
        if (order > 256) continue;
        std::map<int, long long> per_codim;
        std::set<std::vector<std::vector<int>>> bases;
        enumerate_subspaces(p, n, n, [&](const Subspace& v) {
            ++per_codim[v.codim()];
            CHECK(bases.insert(v.dual_basis).second);  // each exactly once
            CHECK(v.members.size() == order / [&] {
                long long q = 1;
                for (int i = 0; i < v.codim(); ++i) q *= p;
                return q;
            }());
        });
        for (int r = 0; r <= n; ++r)
            CHECK(per_codim[r] == gaussian_binomial(p, n, r));
    }
    CHECK_THROWS_AS(enumerate_subspaces(4, 2, 1, [](const Subspace&) {}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_subspaces(2, 2, 3, [](const Subspace&) {}), std::invalid_argument);
}

TEST_CASE("coset density") {
    const auto subs = all_subspaces(2, 4, 2);
    const AbelianGroup g = vector_space_group(2, 4);
    Rng rng{21, 0};

    // A = G: density 1 everywhere
    const Subset full = Subset::full(g);
    for (const auto& v : subs)
        CHECK(coset_density(full, v, static_cast<int>(rng.below(16))) == Rational(1));

    // A = V at zero shift
    for (const auto& v : subs) CHECK(coset_density(v.members, v, 0) == Rational(1));

    // random sets against a direct membership loop
    for (int i = 0; i < 30; ++i) {
        const Subset a = random_subset(g, 0.5, rng);
        const auto& v = subs[rng.below(subs.size())];
        const int x = static_cast<int>(rng.below(16));
        int direct = 0;
        for (int m = 0; m < 16; ++m)
            if (v.members.contains(m) && a.contains(g.add(m, x))) ++direct;
        CHECK(coset_density(a, v, x) == Rational(direct, v.members.size()));
    }

    // average density over coset representatives equals |A|/|G| exactly
    for (int i = 0; i < 20; ++i) {
        const Subset a = random_subset(g, 0.45, rng);
        const auto& v = subs[rng.below(subs.size())];
        Rational avg(0);
        const auto reps = coset_representatives(v);
        for (int x : reps) avg += coset_density(a, v, x);
        avg /= Rational(static_cast<long long>(reps.size()));
        CHECK(avg == Rational(a.size(), 16));
    }
}

TEST_CASE("best shift") {
    const AbelianGroup g = vector_space_group(2, 4);
    const auto subs = all_subspaces(2, 4, 2);
    Rng rng{23, 0};

    // A = V + t recovers density 1 at the coset of t
    for (int i = 0; i < 10; ++i) {
        const auto& v = subs[1 + rng.below(subs.size() - 1)];
        const int t = static_cast<int>(rng.below(16));
        const auto [x, dens] = best_shift(v.members.shifted(t), v);
        CHECK(dens == Rational(1));
        CHECK(coset_density(v.members.shifted(t), v, x) == Rational(1));
    }

    // empty set: density 0
    const auto [x0, d0] = best_shift(Subset(g), subs[2]);
    CHECK(d0 == Rational(0));

    // exhaustive oracle over all 16 shifts
    for (int i = 0; i < 30; ++i) {
        const Subset a = random_subset(g, 0.4, rng);
        const auto& v = subs[rng.below(subs.size())];
        Rational best(0);
        for (int x = 0; x < 16; ++x) best = std::max(best, coset_density(a, v, x));
        CHECK(best_shift(a, v).second == best);
    }
}

TEST_CASE("space basis spans the members") {
    for (auto [p, n, r] : {std::tuple{2, 4, 2}, std::tuple{3, 3, 1}, std::tuple{5, 2, 1}}) {
        const AbelianGroup g = vector_space_group(p, n);
        for (const auto& v : all_subspaces(p, n, r)) {
            const auto basis = space_basis(v);
            CHECK(static_cast<int>(basis.size()) == v.dim());
            // every coefficient vector lands inside members, and counts match
            std::set<int> spanned;
            std::vector<int> coef(basis.size(), 0);
            const long long total = [&] {
                long long t = 1;
                for (std::size_t i = 0; i < basis.size(); ++i) t *= p;
                return t;
            }();
            for (long long code = 0; code < total; ++code) {
                long long c = code;
                std::vector<int> vec(static_cast<std::size_t>(n), 0);
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    const int ck = static_cast<int>(c % p);
                    c /= p;
                    for (int j = 0; j < n; ++j)
                        vec[static_cast<std::size_t>(j)] =
                            (vec[static_cast<std::size_t>(j)] + ck * basis[k][static_cast<std::size_t>(j)]) % p;
                }
                spanned.insert(g.rank_of(vec));
            }
            CHECK(static_cast<int>(spanned.size()) == v.members.size());
            for (int m : spanned) CHECK(v.members.contains(m));
        }
    }
}
