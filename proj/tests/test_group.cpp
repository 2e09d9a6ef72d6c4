#include <doctest.h>

#include <cmath>
#include <complex>

#include "skewlab/corpus.hpp"
#include "skewlab/fourier.hpp"
#include "skewlab/group_function.hpp"

using namespace skewlab;

TEST_CASE("group construction and arithmetic") {
    const AbelianGroup f23 = make_group({2, 2, 2});
    CHECK(f23.order() == 8);

    const AbelianGroup z12 = make_group({12});
    CHECK(z12.add(7, 8) == 3);

    const AbelianGroup z26 = make_group({2, 6});
    CHECK(z26.order() == 12);
    CHECK(z26.rank_of({1, 5}) == 11);
    CHECK(z26.coords(11) == std::vector<int>{1, 5});

    // reduction is idempotent; rank/unrank round-trips
    CHECK(z26.rank_of({3, 17}) == z26.rank_of({1, 5}));
    for (int x = 0; x < z26.order(); ++x) CHECK(z26.rank_of(z26.coords(x)) == x);

    CHECK_THROWS_AS(make_group({}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({4, 0}), std::invalid_argument);
}

TEST_CASE("character evaluation") {
    const AbelianGroup z4({4});
    for (int x = 0; x < 4; ++x) {
        const auto v = evaluate_character(z4, {0}, {x});
        CHECK(std::abs(v - std::complex<double>{1, 0}) < 1e-12);
    }
    CHECK(std::abs(evaluate_character(z4, {1}, {2}) - std::complex<double>{-1, 0}) < 1e-12);

    // Z/12, gamma=3, x=2: e^{2 pi i 6/12} = e^{i pi} = -1... computed directly
    const AbelianGroup z12({12});
    const auto direct = std::exp(std::complex<double>(0, 2 * M_PI * 3.0 * 2.0 / 12.0));
    CHECK(std::abs(evaluate_character(z12, {3}, {2}) - direct) < 1e-12);
    CHECK(std::abs(std::abs(evaluate_character(z12, {5}, {7})) - 1.0) < 1e-12);

    CHECK_THROWS_AS(evaluate_character(z12, {1, 2}, {0}), std::invalid_argument);
}

TEST_CASE("fourier transform basics and naive oracle") {
    Rng rng{42, 0};
    const AbelianGroup z6({6});

    // f == 1: delta on the dual side
    CplxFn one(z6, 1.0);
    DualFn oh = fourier_transform(one);
    CHECK(std::abs(oh[0] - 1.0) < 1e-12);
    for (int t = 1; t < 6; ++t) CHECK(std::abs(oh[t]) < 1e-12);

    // |G| * delta_0 transforms to the constant 1
    CplxFn delta(z6);
    delta[0] = 6.0;
    DualFn dh = fourier_transform(delta);
    for (int t = 0; t < 6; ++t) CHECK(std::abs(dh[t] - 1.0) < 1e-12);

    // per-axis fast path equals the naive O(|G|^2) path
    for (int i = 0; i < 20; ++i) {
        const CplxFn f = random_cplx_fn(z6, rng);
        const DualFn fast = fourier_transform(f);
        const DualFn naive = fourier_transform_naive(f);
        for (int t = 0; t < 6; ++t) CHECK(std::abs(fast[t] - naive[t]) < 1e-9);
    }

    // conjugate symmetry of real transforms
    const RealFn fr = random_real_fn(z6, rng);
    const DualFn fh = fourier_transform(fr);
    for (int t = 0; t < 6; ++t)
        CHECK(std::abs(fh[t] - std::conj(fh[z6.neg(t)])) < 1e-12);
}

TEST_CASE("round trip on mixed groups") {
    Rng rng{7, 0};
    for (const auto& g : {AbelianGroup({2, 6}), AbelianGroup({3, 4}), AbelianGroup({2, 2, 2})}) {
        for (int i = 0; i < 10; ++i) {
            const CplxFn f = random_cplx_fn(g, rng);
            const CplxFn back = inverse_fourier(fourier_transform(f));
            for (int x = 0; x < g.order(); ++x) CHECK(std::abs(back[x] - f[x]) < 1e-9);
        }
    }
}

TEST_CASE("convolution: identities and the integer pair-count oracle") {
    const AbelianGroup z8({8});
    Rng rng{11, 0};

    const RatFn onef(z8, Rational(1));
    const RatFn conv = convolve(onef, onef);
    for (int x = 0; x < 8; ++x) CHECK(conv[x] == Rational(1));

    // delta is the convolution identity up to translation
    RatFn delta(z8);
    delta[3] = Rational(8);
    const RatFn f = random_rat_fn(z8, rng);
    const RatFn shifted = convolve(delta, f);
    for (int x = 0; x < 8; ++x) CHECK(shifted[x] == f[z8.sub(x, 3)]);

    // exact-rational indicator convolution, un-normalized by |G|, equals the
    // integer pair-count from a direct double loop
    for (int i = 0; i < 25; ++i) {
        const Subset a = random_subset(z8, 0.5, rng);
        const Subset b = random_subset(z8, 0.5, rng);
        const RatFn c = convolve(indicator_fn<Rational>(a), indicator_fn<Rational>(b));
        for (int x = 0; x < 8; ++x) {
            long long pairs = 0;  // (u, v) with u + v = x
            for (int u = 0; u < 8; ++u)
                for (int v = 0; v < 8; ++v)
                    if (a.contains(u) && b.contains(v) && z8.add(u, v) == x) ++pairs;
            CHECK(c[x] * Rational(8) == Rational(pairs));
        }
    }
}

TEST_CASE("difference convolution and the adjoint identity") {
    const AbelianGroup z5({5});
    Rng rng{13, 0};

    const RatFn onef(z5, Rational(1));
    const RatFn d = diff_convolve(onef, onef);
    for (int x = 0; x < 5; ++x) CHECK(d[x] == Rational(1));

    // f o f at 0 equals ||f||_2^2
    const RatFn f = random_rat_fn(z5, rng);
    CHECK(diff_convolve(f, f)[0] == lp_norm_pow(f, 2));

    // <f, g*h> = <h o f, g> exactly, both sides by direct summation
    for (int i = 0; i < 50; ++i) {
        const RatFn a = random_rat_fn(z5, rng);
        const RatFn b = random_rat_fn(z5, rng);
        const RatFn c = random_rat_fn(z5, rng);
        Rational lhs(0), rhs(0);
        for (int x = 0; x < 5; ++x) {
            Rational gh(0), hof(0);
            for (int y = 0; y < 5; ++y) {
                gh += b[y] * c[z5.sub(x, y)];
                hof += c[y] * a[z5.add(x, y)];
            }
            lhs += a[x] * gh;
            rhs += b[x] * hof;
        }
        CHECK(lhs == rhs);  // the direct-summation oracle agrees with itself
        CHECK(inner_product(a, convolve(b, c)) == inner_product(diff_convolve(c, a), b));
    }
}

TEST_CASE("p-fold convolution") {
    const AbelianGroup z4({4});
    Rng rng{17, 0};
    const RatFn f = random_rat_fn(z4, rng);
    CHECK(p_fold_convolve(f, 1).v == f.v);

    const RatFn onef(z4, Rational(1));
    const RatFn p5 = p_fold_convolve(onef, 5);
    for (int x = 0; x < 4; ++x) CHECK(p5[x] == Rational(1));

    const RatFn lhs = p_fold_convolve(f, 3);
    const RatFn rhs = convolve(convolve(f, f), f);
    CHECK(lhs.v == rhs.v);
    CHECK_THROWS_AS(p_fold_convolve(f, 0), std::invalid_argument);

    // transform of the p-fold convolve is the pointwise power; and the
    // dual-side counting-measure convolution matches the pointwise power's
    // transform
    const RealFn fr = random_real_fn(z4, rng);
    const DualFn fh = fourier_transform(fr);
    const DualFn ph = fourier_transform(p_fold_convolve(fr, 3));
    for (int t = 0; t < 4; ++t) CHECK(std::abs(ph[t] - fh[t] * fh[t] * fh[t]) < 1e-9);

    RealFn fsq(z4);
    for (int x = 0; x < 4; ++x) fsq[x] = fr[x] * fr[x];
    const DualFn sq_hat = fourier_transform(fsq);
    const DualFn dual_conv = dual_counting_convolve(fh, fh);
    for (int t = 0; t < 4; ++t) CHECK(std::abs(sq_hat[t] - dual_conv[t]) < 1e-9);
}

TEST_CASE("norms and inner products") {
    const AbelianGroup z7({7});
    Rng rng{19, 0};

    const RealFn c3(z7, -3.0);
    CHECK(lp_norm(c3, 4) == doctest::Approx(3.0));
    CHECK(lp_norm(c3, kInfNorm) == doctest::Approx(3.0));

    const Subset a = Subset::of(z7, {1, 4});
    CHECK(linf_norm(normalized_indicator(a)) == Rational(7, 2));  // |G|/|A|

    // measured 2-norm vs direct weighted sum
    const Subset bset = Subset::of(z7, {0, 2, 3});
    const RatFn nu = normalized_indicator(bset);
    const RealFn nur = to_real(nu);
    for (int i = 0; i < 20; ++i) {
        const RealFn f = random_real_fn(z7, rng);
        double direct = 0;
        for (int x = 0; x < 7; ++x) direct += nur[x] * f[x] * f[x];
        CHECK(lp_norm(f, 2, &nur) == doctest::Approx(std::sqrt(direct / 7)).epsilon(1e-12));
    }

    // <1,1> = 1; <mu_A, 1_A> = 1
    const RatFn onef(z7, Rational(1));
    CHECK(inner_product(onef, onef) == Rational(1));
    CHECK(inner_product(normalized_indicator(a), indicator_fn<Rational>(a)) == Rational(1));

    // Plancherel against the dual-side sum
    for (int i = 0; i < 20; ++i) {
        const RealFn f = random_real_fn(z7, rng);
        const RealFn h = random_real_fn(z7, rng);
        const DualFn fh = fourier_transform(f);
        const DualFn hh = fourier_transform(h);
        std::complex<double> dual = 0;
        for (int t = 0; t < 7; ++t) dual += fh[t] * std::conj(hh[t]);
        CHECK(std::abs(inner_product(f, h) - dual) < 1e-9);
    }

    RealFn bad(z7, 1.0);
    bad[0] = -1.0;  // not a measure
    CHECK_THROWS_AS(lp_norm(bad, 2, &bad), std::invalid_argument);
}

TEST_CASE("normalized indicators and reweighting") {
    const AbelianGroup z8({8});

    const RatFn mu_g = normalized_indicator(Subset::full(z8));
    for (int x = 0; x < 8; ++x) CHECK(mu_g[x] == Rational(1));

    const RatFn mu_0 = normalized_indicator(Subset::of(z8, {0}));
    CHECK(mu_0[0] == Rational(8));
    for (int x = 1; x < 8; ++x) CHECK(mu_0[x] == Rational(0));

    CHECK_THROWS_AS(normalized_indicator(Subset(z8)), std::invalid_argument);

    // nu_f with nu = mu_B, f = 1_A equals mu_{A cap B}
    Rng rng{23, 0};
    for (int i = 0; i < 20; ++i) {
        const Subset a = random_nonempty_subset(z8, 0.6, rng);
        const Subset b = random_nonempty_subset(z8, 0.6, rng);
        if (a.intersect(b).empty()) continue;
        const RatFn got = reweight(normalized_indicator(b), indicator_fn<Rational>(a));
        const RatFn want = normalized_indicator(a.intersect(b));
        CHECK(got.v == want.v);
    }
    CHECK_THROWS_AS(reweight(normalized_indicator(Subset::of(z8, {0})),
                             indicator_fn<Rational>(Subset::of(z8, {1}))),
                    std::invalid_argument);

    // measure invariants on constructor outputs
    for (int i = 0; i < 20; ++i) {
        const Subset a = random_nonempty_subset(z8, 0.5, rng);
        CHECK(is_measure(normalized_indicator(a)));
    }
}

TEST_CASE("translate") {
    const AbelianGroup z9({9});
    Rng rng{29, 0};
    const RatFn f = random_rat_fn(z9, rng);

    CHECK(translate(f, 0).v == f.v);
    CHECK(translate(translate(f, 4), z9.neg(4)).v == f.v);

    RatFn spike(z9);
    spike[2] = Rational(1);
    CHECK(translate(spike, 5)[z9.add(2, 5)] == Rational(1));

    const RealFn fr = random_real_fn(z9, rng);
    const RealFn tr = translate(fr, 7);
    for (int p : {1, 2, 3})
        CHECK(lp_norm(tr, p) == doctest::Approx(lp_norm(fr, p)).epsilon(1e-12));
}

TEST_CASE("spectral non-negativity") {
    const AbelianGroup z5({5});
    Rng rng{31, 0};
    for (int i = 0; i < 10; ++i) {
        const RealFn f = random_real_fn(z5, rng);
        CHECK(is_spectrally_nonneg(diff_convolve(f, f)));
    }

    // |G| delta_0 - 1: flat nonnegative spectrum
    RealFn spike(AbelianGroup({5}), -1.0);
    spike[0] += 5.0;
    CHECK(is_spectrally_nonneg(spike));

    // 1_{1} - 1_{2} on Z/4: coefficients computed directly in the oracle test
    const AbelianGroup z4({4});
    RealFn diff(z4);
    diff[1] = 1.0;
    diff[2] = -1.0;
    const DualFn dh = fourier_transform_naive([&] {
        CplxFn c(z4);
        for (int x = 0; x < 4; ++x) c[x] = diff[x];
        return c;
    }());
    bool any_negative = false;
    for (int t = 0; t < 4; ++t)
        if (dh[t].real() < -1e-9 || std::abs(dh[t].imag()) > 1e-9) any_negative = true;
    CHECK(any_negative);
    CHECK_FALSE(is_spectrally_nonneg(diff));
}
