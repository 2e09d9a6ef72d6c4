#include "skewlab/corpus.hpp"

#include <algorithm>
#include <cmath>

namespace skewlab {

std::vector<AbelianGroup> small_group_pool() {
    return {AbelianGroup({12}),      AbelianGroup({2, 2, 2}), AbelianGroup({2, 6}),
            AbelianGroup({5}),       AbelianGroup({7}),       AbelianGroup({8}),
            AbelianGroup({16}),      AbelianGroup({3, 3}),    AbelianGroup({4, 4}),
            AbelianGroup({2, 2, 3}), AbelianGroup({15}),      AbelianGroup({13})};
}

std::vector<AbelianGroup> harmonic_group_pool() {
    return {AbelianGroup({2}),        AbelianGroup({6}),       AbelianGroup({12}),
            AbelianGroup({2, 6}),     AbelianGroup({2, 2, 2}), AbelianGroup({24}),
            AbelianGroup({36}),       AbelianGroup({60}),      AbelianGroup({64}),
            AbelianGroup({2, 2, 2, 2, 2, 2}),                  AbelianGroup({4, 4, 4}),
            AbelianGroup({63}),       AbelianGroup({3, 3, 7}), AbelianGroup({2, 32})};
}

ColumnFamily random_family(const AbelianGroup& g, double col_density, double pt_density, Rng& rng) {
    ColumnFamily fam(g);
    bool any = false;
    for (int x = 0; x < g.order(); ++x) {
        if (!rng.coin(col_density)) continue;
        Subset col = random_subset(g, pt_density, rng);
        if (!col.empty()) any = true;
        fam.set_column(x, std::move(col));
    }
    if (!any) fam.add_point(static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order()))),
                            static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order()))));
    fam.freeze();
    return fam;
}

GridSet random_grid(int n, int num_points, Rng& rng) {
    GridSet grid;
    grid.n = n;
    for (int i = 0; i < num_points; ++i)
        grid.points.emplace_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                                 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    std::sort(grid.points.begin(), grid.points.end());
    grid.points.erase(std::unique(grid.points.begin(), grid.points.end()), grid.points.end());
    return grid;
}

RealFn random_real_fn(const AbelianGroup& g, Rng& rng, double amplitude) {
    RealFn f(g);
    for (int x = 0; x < g.order(); ++x) f[x] = amplitude * (2.0 * rng.unit() - 1.0);
    return f;
}

RatFn random_rat_fn(const AbelianGroup& g, Rng& rng, int denom_bound) {
    RatFn f(g);
    for (int x = 0; x < g.order(); ++x) {
        const long long num = static_cast<long long>(rng.below(17)) - 8;
        const long long den = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(denom_bound)));
        f[x] = Rational(num, den);
    }
    return f;
}

CplxFn random_cplx_fn(const AbelianGroup& g, Rng& rng) {
    CplxFn f(g);
    for (int x = 0; x < g.order(); ++x)
        f[x] = {2.0 * rng.unit() - 1.0, 2.0 * rng.unit() - 1.0};
    return f;
}

BohrSet random_bohr(int modulus, int max_rank, Rng& rng) {
    const AbelianGroup g({modulus});
    const int rank = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_rank)));
    std::vector<std::vector<int>> gamma;
    for (int i = 0; i < rank; ++i)
        gamma.push_back({1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(modulus - 1)))});
    // Any fixed width sits at distance >= ~1/(2N^2) from the nearest radius
    // value 2|sin(pi k/N)| only generically; nudge until clear of ties.
    double phi = 0.15 + 1.7 * rng.unit();
    BohrSet b = bohr_set(g, gamma, phi);
    for (int tries = 0; tries < 32 && b.boundary_ties > 0; ++tries) {
        phi = std::min(2.0, phi + 3e-7);
        b = bohr_set(g, gamma, phi);
    }
    return b;
}

}  // namespace skewlab
