#pragma once

#include <complex>
#include <vector>

#include "skewlab/group_function.hpp"

namespace skewlab {

// Transform of f lives on the dual group, indexed by the same mixed-radix
// coordinate space (self-duality of a product of cyclic groups).
struct DualFn {
    AbelianGroup group;
    std::vector<std::complex<double>> v;

    DualFn() = default;
    explicit DualFn(const AbelianGroup& g) : group(g), v(static_cast<std::size_t>(g.order())) {}

    std::complex<double>& operator[](int x) { return v[static_cast<std::size_t>(x)]; }
    const std::complex<double>& operator[](int x) const { return v[static_cast<std::size_t>(x)]; }
    int size() const { return group.order(); }
};

// gamma(x) = exp(2 pi i sum_j gamma_j x_j / n_j); unit modulus.
std::complex<double> evaluate_character(const AbelianGroup& g, const std::vector<int>& gamma,
                                        const std::vector<int>& x);
std::complex<double> evaluate_character_rank(const AbelianGroup& g, int gamma_rank, int x_rank);

// fhat(gamma) = E_x f(x) gamma(-x), computed by per-axis transforms in
// O(|G| * sum n_j).
DualFn fourier_transform(const CplxFn& f);
DualFn fourier_transform(const RealFn& f);
DualFn fourier_transform(const RatFn& f);

// O(|G|^2) reference path; kept as the oracle the fast path is tested
// against.
DualFn fourier_transform_naive(const CplxFn& f);

// f(x) = sum_gamma fhat(gamma) gamma(x).
CplxFn inverse_fourier(const DualFn& fhat);

// True iff min_gamma Re(fhat) >= -tol and max |Im(fhat)| <= tol.
bool is_spectrally_nonneg(const RealFn& f, double tol = 1e-9);
bool is_spectrally_nonneg(const RatFn& f, double tol = 1e-9);

// Dual-side convolution with the ordinary counting measure:
// (f * g)(gamma) = sum_tau f(tau) g(gamma - tau). With this convention the
// transform of a pointwise power is the iterated dual convolution.
DualFn dual_counting_convolve(const DualFn& f, const DualFn& g);

}  // namespace skewlab
