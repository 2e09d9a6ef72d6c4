#include "skewlab/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace skewlab {

namespace {

constexpr double kTieEps = 1e-12;

// |1 - gamma(x)| = sqrt(2 - 2 cos(2 pi <gamma, x>)); the squared form is what
// gets compared against phi^2.
std::vector<double> radius_table(const AbelianGroup& g, const std::vector<std::vector<int>>& gamma) {
    std::vector<double> r(static_cast<std::size_t>(g.order()), 0.0);
    for (const auto& freq : gamma) {
        if (static_cast<int>(freq.size()) != g.num_factors())
            throw std::invalid_argument("bohr_set: frequency shape mismatch");
        for (int x = 0; x < g.order(); ++x) {
            const auto c = g.coords(x);
            double turns = 0;
            for (int j = 0; j < g.num_factors(); ++j)
                turns += static_cast<double>(freq[j]) * c[j] / g.factors()[j];
            turns -= std::floor(turns);
            const double sq = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * turns);
            r[static_cast<std::size_t>(x)] =
                std::max(r[static_cast<std::size_t>(x)], std::sqrt(std::max(sq, 0.0)));
        }
    }
    return r;
}

BohrSet materialize(const AbelianGroup& g, std::vector<std::vector<int>> gamma, double phi,
                    std::shared_ptr<const std::vector<double>> radii) {
    BohrSet b;
    b.group = g;
    b.gamma = std::move(gamma);
    b.phi = phi;
    b.radii = std::move(radii);
    b.members = Subset(g);
    for (int x = 0; x < g.order(); ++x) {
        const double r = (*b.radii)[static_cast<std::size_t>(x)];
        if (r <= phi) b.members.insert(x);
        if (std::abs(r - phi) <= kTieEps) ++b.boundary_ties;  // inclusive boundary, flagged
    }
    return b;
}

}  // namespace

BohrSet bohr_set(const AbelianGroup& g, const std::vector<std::vector<int>>& gamma, double phi) {
    if (gamma.empty()) throw std::invalid_argument("bohr_set: empty frequency set");
    if (phi < 0 || phi > 2) throw std::invalid_argument("bohr_set: width outside [0,2]");
    auto radii = std::make_shared<const std::vector<double>>(radius_table(g, gamma));
    return materialize(g, gamma, phi, std::move(radii));
}

BohrSet dilate(const BohrSet& b, double rho) {
    if (rho <= 0) throw std::invalid_argument("dilate: rho must be positive");
    const double width = std::min(rho * b.phi, 2.0);
    return materialize(b.group, b.gamma, width, b.radii);
}

bool is_sub_bohr(const BohrSet& sub, const BohrSet& super) {
    if (sub.group != super.group) throw std::invalid_argument("is_sub_bohr: group mismatch");
    if (sub.phi > super.phi) return false;
    for (const auto& freq : super.gamma) {
        bool found = false;
        for (const auto& f2 : sub.gamma)
            if (f2 == freq) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

namespace {

// Count of elements with radius <= w.
int count_within(const std::vector<double>& sorted_radii, double w) {
    return static_cast<int>(std::upper_bound(sorted_radii.begin(), sorted_radii.end(), w) -
                            sorted_radii.begin());
}

std::vector<double> sorted_radii_of(const BohrSet& b) {
    std::vector<double> s(*b.radii);
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

bool is_regular(const BohrSet& b) {
    const int r = b.rank();
    const double K = 1.0 / (100.0 * r);
    if (b.phi == 0) return true;  // all dilates coincide with the kernel
    const auto sorted = sorted_radii_of(b);
    const int base = count_within(sorted, b.phi);

    // Growth side: |B_{1+kappa}| steps up exactly when kappa reaches
    // v/phi - 1 for a radius value v > phi; between breakpoints the left
    // endpoint is binding because the right side grows.
    std::set<double> grow;
    for (double v : sorted)
        if (v > b.phi && v <= (1.0 + K) * b.phi) grow.insert(v);
    for (double v : grow) {
        const double kappa = v / b.phi - 1.0;
        if (kappa > K) continue;
        const int lhs = count_within(sorted, v);
        const double rhs = (1.0 + 100.0 * kappa * r) * base;
        if (lhs > rhs) return false;
    }
    // Shrink side: |B_{1-kappa}| steps down just after kappa passes
    // 1 - v/phi; the binding point is the open left end of each constancy
    // interval, i.e. the post-drop count against the breakpoint's right side.
    std::set<double> drop;
    for (double v : sorted)
        if (v > (1.0 - K) * b.phi && v <= b.phi) drop.insert(v);
    for (double v : drop) {
        const double kappa = 1.0 - v / b.phi;
        if (kappa >= K) continue;  // the drop happens outside the quantified range
        const int lhs = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                         sorted.begin());  // strictly below v
        const double rhs = (1.0 - 100.0 * kappa * r) * base;
        if (lhs < rhs) return false;
    }
    return true;
}

bool is_regular_grid_oracle(const BohrSet& b, int grid_points) {
    const int r = b.rank();
    const double K = 1.0 / (100.0 * r);
    if (b.phi == 0) return true;
    const auto sorted = sorted_radii_of(b);
    const int base = count_within(sorted, b.phi);
    for (int i = 0; i < grid_points; ++i) {
        const double kappa = K * i / (grid_points - 1);
        const int up = count_within(sorted, (1.0 + kappa) * b.phi);
        const int dn = count_within(sorted, (1.0 - kappa) * b.phi);
        if (up > (1.0 + 100.0 * kappa * r) * base) return false;
        if (dn < (1.0 - 100.0 * kappa * r) * base) return false;
    }
    return true;
}

double find_regular_dilate(const BohrSet& b) {
    if (b.phi == 0) return 1.0;
    // Scan candidates from the breakpoint structure: midpoints between
    // consecutive normalized radii (ties with the boundary cannot occur
    // there), plus the interval endpoints. Largest regular candidate wins.
    std::set<double> cuts;
    cuts.insert(0.5);
    cuts.insert(1.0);
    for (double v : *b.radii) {
        const double u = v / b.phi;
        if (u >= 0.5 && u <= 1.0) cuts.insert(u);
    }
    std::vector<double> pts(cuts.begin(), cuts.end());
    std::vector<double> candidates{1.0};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) candidates.push_back((pts[i] + pts[i + 1]) / 2);
    candidates.push_back(0.5);
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    for (double rho : candidates)
        if (is_regular(dilate(b, rho))) return rho;
    for (int i = 10000; i >= 0; --i) {
        const double rho = 0.5 + 0.5 * i / 10000.0;
        if (is_regular(dilate(b, rho))) return rho;
    }
    throw std::runtime_error("find_regular_dilate: no regular dilate in [1/2,1] (bug trap)");
}

CheckReport check_size_bound(const BohrSet& b, double rho) {
    if (rho <= 0 || rho >= 1) throw std::invalid_argument("check_size_bound: rho outside (0,1)");
    CheckReport rep;
    rep.check = "size_bound";
    rep.lhs = dilate(b, rho).size();
    rep.rhs = std::pow(rho / 4.0, b.rank()) * b.size();
    rep.pass = rep.lhs >= rep.rhs;
    return rep;
}

namespace {

void require_supported_on(const RealFn& nu, const BohrSet& ball, const char* who) {
    if (nu.group != ball.group) throw std::invalid_argument(std::string(who) + ": group mismatch");
    if (!is_measure(nu)) throw std::invalid_argument(std::string(who) + ": nu is not a measure");
    for (int x = 0; x < nu.size(); ++x)
        if (nu[x] != 0 && !ball.members.contains(x))
            throw std::invalid_argument(std::string(who) + ": nu leaks outside the dilate");
}

}  // namespace

CheckReport check_domination(const BohrSet& b, const RealFn& nu, double rho, const Constants& cfg) {
    require_supported_on(nu, dilate(b, rho), "check_domination");
    CheckReport rep;
    rep.check = "domination";
    if (rho > cfg.c_dom / b.rank()) rep.note = "rho outside regime";
    const RealFn mu_b = normalized_indicator_real(b.members);
    const RealFn rhs = convolve(normalized_indicator_real(dilate(b, 1.0 + rho).members), nu);
    double worst = 0;
    for (int x = 0; x < mu_b.size(); ++x) worst = std::max(worst, mu_b[x] - 2.0 * rhs[x]);
    rep.lhs = worst;  // max pointwise violation
    rep.rhs = 1e-9;
    rep.pass = worst <= 1e-9;
    return rep;
}

CheckReport check_l1_smoothing(const BohrSet& b, const RealFn& nu, double rho, const Constants& cfg) {
    if (rho <= 0 || rho >= 1) throw std::invalid_argument("check_l1_smoothing: rho outside (0,1)");
    require_supported_on(nu, dilate(b, rho), "check_l1_smoothing");
    const RealFn mu_b = normalized_indicator_real(b.members);
    const RealFn diff = sub(convolve(mu_b, nu), mu_b);
    CheckReport rep;
    rep.check = "l1_smoothing";
    rep.lhs = lp_norm(diff, 1);
    rep.rhs = cfg.c_smooth * rho * b.rank();
    const bool in_regime = rho <= 1.0 / (100.0 * b.rank());
    if (!in_regime) rep.note = "rho outside regime; value reported, bound not asserted";
    rep.pass = !in_regime || rep.lhs <= rep.rhs + 1e-9;
    return rep;
}

CheckReport check_approx_invariance(const RealFn& f, const BohrSet& b, const RealFn& nu, double rho,
                                    const Constants& cfg) {
    if (f.group != b.group) throw std::invalid_argument("check_approx_invariance: group mismatch");
    require_supported_on(nu, dilate(b, rho), "check_approx_invariance");
    const RealFn mu_b = normalized_indicator_real(b.members);
    CheckReport rep;
    rep.check = "approx_invariance";
    rep.lhs = std::abs(inner_product(convolve(f, nu), mu_b) - inner_product(f, mu_b));
    rep.rhs = cfg.c_smooth * lp_norm(f, kInfNorm) * rho * b.rank();
    const bool in_regime = rho <= 1.0 / (100.0 * b.rank());
    if (!in_regime) rep.note = "rho outside regime; value reported, bound not asserted";
    rep.pass = !in_regime || rep.lhs <= rep.rhs + 1e-9;
    return rep;
}

}  // namespace skewlab
