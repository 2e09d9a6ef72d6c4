#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "skewlab/group.hpp"
#include "skewlab/rational.hpp"

namespace skewlab {

// A dense function on a finite abelian group, indexed by element rank.
// Payload is one of: exact rational, double, complex double.
template <class T>
struct GroupFn {
    AbelianGroup group;
    std::vector<T> v;

    GroupFn() = default;
    GroupFn(const AbelianGroup& g, T fill = T()) : group(g), v(static_cast<std::size_t>(g.order()), fill) {}

    T& operator[](int x) { return v[static_cast<std::size_t>(x)]; }
    const T& operator[](int x) const { return v[static_cast<std::size_t>(x)]; }
    int size() const { return group.order(); }
};

using RatFn = GroupFn<Rational>;
using RealFn = GroupFn<double>;
using CplxFn = GroupFn<std::complex<double>>;

inline RealFn to_real(const RatFn& f) {
    RealFn r(f.group);
    for (int x = 0; x < f.size(); ++x) r[x] = to_double(f[x]);
    return r;
}

template <class T>
void require_same_group(const GroupFn<T>& f, const GroupFn<T>& g) {
    if (f.group != g.group) throw std::invalid_argument("GroupFn: group mismatch");
}

template <class T>
GroupFn<T> indicator_fn(const Subset& a) {
    GroupFn<T> f(a.group());
    for (int x = 0; x < f.size(); ++x) f[x] = a.contains(x) ? T(1) : T(0);
    return f;
}

template <class T>
T mean(const GroupFn<T>& f) {
    T s{};
    for (const auto& x : f.v) s += x;
    return s / T(f.size());
}

template <class T>
GroupFn<T> add(const GroupFn<T>& f, const GroupFn<T>& g) {
    require_same_group(f, g);
    GroupFn<T> r(f.group);
    for (int x = 0; x < f.size(); ++x) r[x] = f[x] + g[x];
    return r;
}

template <class T>
GroupFn<T> sub(const GroupFn<T>& f, const GroupFn<T>& g) {
    require_same_group(f, g);
    GroupFn<T> r(f.group);
    for (int x = 0; x < f.size(); ++x) r[x] = f[x] - g[x];
    return r;
}

template <class T>
GroupFn<T> scale(const GroupFn<T>& f, const T& c) {
    GroupFn<T> r(f.group);
    for (int x = 0; x < f.size(); ++x) r[x] = f[x] * c;
    return r;
}

template <class T>
GroupFn<T> add_const(const GroupFn<T>& f, const T& c) {
    GroupFn<T> r(f.group);
    for (int x = 0; x < f.size(); ++x) r[x] = f[x] + c;
    return r;
}

// (f * g)(x) = E_y f(y) g(x - y); expectation-normalized, exact in the
// rational kind.
template <class T>
GroupFn<T> convolve(const GroupFn<T>& f, const GroupFn<T>& g) {
    require_same_group(f, g);
    const auto& G = f.group;
    GroupFn<T> r(G);
    const int n = G.order();
    for (int y = 0; y < n; ++y) {
        if (f[y] == T(0)) continue;
        for (int x = 0; x < n; ++x) r[x] += f[y] * g[G.sub(x, y)];
    }
    for (int x = 0; x < n; ++x) r[x] /= T(n);
    return r;
}

// (f o g)(x) = E_y f(y) g(x + y), the difference convolution.
template <class T>
GroupFn<T> diff_convolve(const GroupFn<T>& f, const GroupFn<T>& g) {
    require_same_group(f, g);
    const auto& G = f.group;
    GroupFn<T> r(G);
    const int n = G.order();
    for (int y = 0; y < n; ++y) {
        if (f[y] == T(0)) continue;
        for (int x = 0; x < n; ++x) r[x] += f[y] * g[G.add(x, y)];
    }
    for (int x = 0; x < n; ++x) r[x] /= T(n);
    return r;
}

// f^(p) = f * f^(p-1), f^(1) = f.
template <class T>
GroupFn<T> p_fold_convolve(const GroupFn<T>& f, int p) {
    if (p < 1) throw std::invalid_argument("p_fold_convolve: p must be >= 1");
    GroupFn<T> r = f;
    for (int i = 1; i < p; ++i) r = convolve(f, r);
    return r;
}

// f^g(x) = f(x - g).
template <class T>
GroupFn<T> translate(const GroupFn<T>& f, int g) {
    GroupFn<T> r(f.group);
    for (int x = 0; x < f.size(); ++x) r[x] = f[f.group.sub(x, g)];
    return r;
}

// --- measures ---------------------------------------------------------

inline bool is_measure(const RatFn& nu) {
    for (const auto& x : nu.v)
        if (x < 0) return false;
    return mean(nu) == Rational(1);
}

inline bool is_measure(const RealFn& nu, double tol = 1e-9) {
    for (double x : nu.v)
        if (x < -tol) return false;
    return std::abs(mean(nu) - 1.0) <= tol;
}

template <class T>
GroupFn<T> uniform_measure(const AbelianGroup& g) {
    return GroupFn<T>(g, T(1));
}

// mu_A = (|G|/|A|) 1_A, a mean-1 measure supported on A.
inline RatFn normalized_indicator(const Subset& a) {
    if (a.empty()) throw std::invalid_argument("normalized_indicator: empty set");
    const auto& g = a.group();
    RatFn f(g);
    const Rational w(g.order(), a.size());
    for (int x = 0; x < g.order(); ++x)
        if (a.contains(x)) f[x] = w;
    return f;
}

inline RealFn normalized_indicator_real(const Subset& a) { return to_real(normalized_indicator(a)); }

// nu_f(x) = nu(x) f(x) / nu(f), for nonnegative f with nu(f) > 0.
inline RatFn reweight(const RatFn& nu, const RatFn& f) {
    require_same_group(nu, f);
    Rational nf(0);
    for (int x = 0; x < f.size(); ++x) {
        if (f[x] < 0) throw std::invalid_argument("reweight: f must be nonnegative");
        nf += nu[x] * f[x];
    }
    nf /= Rational(f.size());
    if (nf == 0) throw std::invalid_argument("reweight: nu(f) = 0");
    RatFn r(f.group);
    for (int x = 0; x < f.size(); ++x) r[x] = nu[x] * f[x] / nf;
    return r;
}

// mu_f = f / E[f]; the common normalization for nonneg f of positive mean.
inline RatFn mean_normalize(const RatFn& f) {
    const Rational m = mean(f);
    if (m == 0) throw std::invalid_argument("mean_normalize: zero mean");
    RatFn r(f.group);
    for (int x = 0; x < f.size(); ++x) r[x] = f[x] / m;
    return r;
}

inline RealFn mean_normalize(const RealFn& f) {
    const double m = mean(f);
    if (m == 0) throw std::invalid_argument("mean_normalize: zero mean");
    RealFn r(f.group);
    for (int x = 0; x < f.size(); ++x) r[x] = f[x] / m;
    return r;
}

// --- inner products and norms -----------------------------------------

// <f, g>_nu = E_x nu(x) f(x) g(x); uniform measure when nu omitted.
inline Rational inner_product(const RatFn& f, const RatFn& g) {
    require_same_group(f, g);
    Rational s(0);
    for (int x = 0; x < f.size(); ++x) s += f[x] * g[x];
    return s / Rational(f.size());
}

inline Rational inner_product(const RatFn& f, const RatFn& g, const RatFn& nu) {
    require_same_group(f, g);
    require_same_group(f, nu);
    if (!is_measure(nu)) throw std::invalid_argument("inner_product: nu is not a measure");
    Rational s(0);
    for (int x = 0; x < f.size(); ++x) s += nu[x] * f[x] * g[x];
    return s / Rational(f.size());
}

inline double inner_product(const RealFn& f, const RealFn& g) {
    require_same_group(f, g);
    double s = 0;
    for (int x = 0; x < f.size(); ++x) s += f[x] * g[x];
    return s / f.size();
}

inline double inner_product(const RealFn& f, const RealFn& g, const RealFn& nu) {
    require_same_group(f, g);
    require_same_group(f, nu);
    if (!is_measure(nu)) throw std::invalid_argument("inner_product: nu is not a measure");
    double s = 0;
    for (int x = 0; x < f.size(); ++x) s += nu[x] * f[x] * g[x];
    return s / f.size();
}

constexpr int kInfNorm = -1;

// ||f||_p(nu) = (E_x nu(x) |f(x)|^p)^(1/p); p = kInfNorm gives the global
// max of |f| (not restricted to the support of nu). Scaled by the max first
// so large p does not overflow.
inline double lp_norm(const RealFn& f, int p, const RealFn* nu = nullptr) {
    if (nu) {
        require_same_group(f, *nu);
        if (!is_measure(*nu)) throw std::invalid_argument("lp_norm: nu is not a measure");
    }
    double m = 0;
    for (double x : f.v) m = std::max(m, std::abs(x));
    if (p == kInfNorm) return m;
    if (p < 1) throw std::invalid_argument("lp_norm: p must be >= 1 or infinity");
    if (m == 0) return 0;
    double s = 0;
    for (int x = 0; x < f.size(); ++x) {
        const double w = nu ? (*nu)[x] : 1.0;
        if (w == 0) continue;
        s += w * std::pow(std::abs(f[x]) / m, p);
    }
    s /= f.size();
    return m * std::pow(s, 1.0 / p);
}

inline double lp_norm(const RatFn& f, int p, const RatFn* nu = nullptr) {
    RealFn fr = to_real(f);
    if (nu) {
        RealFn nur = to_real(*nu);
        return lp_norm(fr, p, &nur);
    }
    return lp_norm(fr, p, nullptr);
}

// Exact p-th power of the measured p-norm, ||f||_p(nu)^p, in rationals.
inline Rational lp_norm_pow(const RatFn& f, int p, const RatFn* nu = nullptr) {
    if (p < 1) throw std::invalid_argument("lp_norm_pow: p must be >= 1");
    if (nu) {
        require_same_group(f, *nu);
        if (!is_measure(*nu)) throw std::invalid_argument("lp_norm_pow: nu is not a measure");
    }
    Rational s(0);
    for (int x = 0; x < f.size(); ++x) {
        const Rational w = nu ? (*nu)[x] : Rational(1);
        if (w == 0) continue;
        s += w * rat_pow(rat_abs(f[x]), p);
    }
    return s / Rational(f.size());
}

inline Rational linf_norm(const RatFn& f) {
    Rational m(0);
    for (const auto& x : f.v) m = std::max(m, rat_abs(x));
    return m;
}

}  // namespace skewlab
