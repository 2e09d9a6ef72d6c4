#include "skewlab/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace skewlab {

namespace {

std::complex<double> unit_phase(double turns) {
    const double theta = 2.0 * std::numbers::pi * turns;
    return {std::cos(theta), std::sin(theta)};
}

}  // namespace

std::complex<double> evaluate_character(const AbelianGroup& g, const std::vector<int>& gamma,
                                        const std::vector<int>& x) {
    if (static_cast<int>(gamma.size()) != g.num_factors() ||
        static_cast<int>(x.size()) != g.num_factors())
        throw std::invalid_argument("evaluate_character: shape mismatch");
    double turns = 0;
    for (int j = 0; j < g.num_factors(); ++j)
        turns += static_cast<double>(gamma[j]) * static_cast<double>(x[j]) / g.factors()[j];
    return unit_phase(turns);
}

std::complex<double> evaluate_character_rank(const AbelianGroup& g, int gamma_rank, int x_rank) {
    return evaluate_character(g, g.coords(gamma_rank), g.coords(x_rank));
}

namespace {

// One unnormalized DFT along every axis with kernel exp(sign * 2 pi i t x / n).
// Input layout is the group's mixed-radix rank order.
std::vector<std::complex<double>> axis_transforms(const AbelianGroup& g,
                                                  std::vector<std::complex<double>> data, int sign) {
    const int total = g.order();
    int inner = total;  // product of factor sizes from axis j onward
    for (int j = 0; j < g.num_factors(); ++j) {
        const int n = g.factors()[j];
        inner /= n;
        // Precompute the n x n kernel for this axis.
        std::vector<std::complex<double>> kernel(static_cast<std::size_t>(n) * n);
        for (int t = 0; t < n; ++t)
            for (int x = 0; x < n; ++x)
                kernel[static_cast<std::size_t>(t) * n + x] =
                    unit_phase(sign * static_cast<double>(t) * x / n);
        std::vector<std::complex<double>> out(data.size());
        const int outer = total / (n * inner);
        for (int o = 0; o < outer; ++o) {
            for (int i = 0; i < inner; ++i) {
                const int base = o * n * inner + i;
                for (int t = 0; t < n; ++t) {
                    std::complex<double> acc = 0;
                    for (int x = 0; x < n; ++x)
                        acc += kernel[static_cast<std::size_t>(t) * n + x] * data[base + x * inner];
                    out[base + t * inner] = acc;
                }
            }
        }
        data.swap(out);
    }
    return data;
}

}  // namespace

DualFn fourier_transform(const CplxFn& f) {
    DualFn out(f.group);
    out.v = axis_transforms(f.group, f.v, -1);
    const double n = f.group.order();
    for (auto& z : out.v) z /= n;
    return out;
}

DualFn fourier_transform(const RealFn& f) {
    CplxFn c(f.group);
    for (int x = 0; x < f.size(); ++x) c[x] = f[x];
    return fourier_transform(c);
}

DualFn fourier_transform(const RatFn& f) {
    CplxFn c(f.group);
    for (int x = 0; x < f.size(); ++x) c[x] = to_double(f[x]);
    return fourier_transform(c);
}

DualFn fourier_transform_naive(const CplxFn& f) {
    const auto& g = f.group;
    DualFn out(g);
    for (int t = 0; t < g.order(); ++t) {
        std::complex<double> acc = 0;
        for (int x = 0; x < g.order(); ++x)
            acc += f[x] * evaluate_character_rank(g, t, g.neg(x));
        out[t] = acc / static_cast<double>(g.order());
    }
    return out;
}

CplxFn inverse_fourier(const DualFn& fhat) {
    CplxFn out(fhat.group);
    out.v = axis_transforms(fhat.group, fhat.v, +1);
    return out;
}

bool is_spectrally_nonneg(const RealFn& f, double tol) {
    const DualFn fh = fourier_transform(f);
    for (const auto& z : fh.v) {
        if (z.real() < -tol) return false;
        if (std::abs(z.imag()) > tol) return false;
    }
    return true;
}

bool is_spectrally_nonneg(const RatFn& f, double tol) { return is_spectrally_nonneg(to_real(f), tol); }

DualFn dual_counting_convolve(const DualFn& f, const DualFn& g) {
    if (f.group != g.group) throw std::invalid_argument("dual_counting_convolve: group mismatch");
    const auto& G = f.group;
    DualFn r(G);
    for (int t = 0; t < G.order(); ++t) {
        std::complex<double> acc = 0;
        for (int s = 0; s < G.order(); ++s) acc += f[s] * g[G.sub(t, s)];
        r[t] = acc;
    }
    return r;
}

}  // namespace skewlab
