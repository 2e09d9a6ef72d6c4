#include "skewlab/corners.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewlab {

void ColumnFamily::freeze() {
    if (frozen_) return;
    for (int g = 0; g < group_.order(); ++g) {
        const auto& col = columns_[static_cast<std::size_t>(g)];
        if (!index_.contains(g) && !col.empty())
            throw std::logic_error("ColumnFamily: column outside index set");
        if (container_ && !col.subset_of(*container_))
            throw std::logic_error("ColumnFamily: column escapes container");
    }
    frozen_ = true;
}

std::vector<long long> ColumnFamily::profile() const {
    std::vector<long long> d(static_cast<std::size_t>(group_.order()), 0);
    for (int g = 0; g < group_.order(); ++g)
        if (index_.contains(g)) d[static_cast<std::size_t>(g)] = column(g).size();
    return d;
}

RatFn ColumnFamily::profile_fn() const {
    RatFn f(group_);
    const auto d = profile();
    for (int g = 0; g < group_.order(); ++g) f[g] = Rational(d[static_cast<std::size_t>(g)]);
    return f;
}

long long ColumnFamily::total_points() const {
    long long t = 0;
    for (int g = 0; g < group_.order(); ++g)
        if (index_.contains(g)) t += column(g).size();
    return t;
}

Rational ColumnFamily::sum_sq_densities() const {
    Rational s(0);
    const Rational n(group_.order());
    for (int g = 0; g < group_.order(); ++g)
        if (index_.contains(g)) s += rat_pow(Rational(column(g).size()) / n, 2);
    return s;
}

SkewInstance group_instance(ColumnFamily fam) {
    fam.freeze();
    SkewInstance i;
    i.mode = InstanceMode::group;
    i.family = std::move(fam);
    return i;
}

SkewInstance grid_instance(GridSet g) {
    for (auto [x, y] : g.points)
        if (x < 1 || x > g.n || y < 1 || y > g.n)
            throw std::invalid_argument("grid_instance: point out of range");
    std::sort(g.points.begin(), g.points.end());
    g.points.erase(std::unique(g.points.begin(), g.points.end()), g.points.end());
    SkewInstance i;
    i.mode = InstanceMode::grid;
    i.grid = std::move(g);
    return i;
}

namespace {

SkewCount count_group_brute(const ColumnFamily& fam) {
    const auto& g = fam.group();
    const auto d = fam.profile();
    SkewCount c;
    long long trivial_direct = 0;
    for (int x = 0; x < g.order(); ++x) {
        if (!fam.index().contains(x)) continue;
        const Subset& col = fam.column(x);
        const auto ys = col.members();
        for (int y : ys) {
            for (int y2 : ys) {
                const int h = g.sub(y2, y);
                c.total += d[static_cast<std::size_t>(g.add(x, h))];
                if (h == 0) trivial_direct += d[static_cast<std::size_t>(x)];
            }
        }
    }
    c.nontrivial = c.total - trivial_direct;
    // trivial triples per column: |A_x| choices of y times |A_x| of y'
    long long sum_sq = 0;
    for (auto dx : d) sum_sq += dx * dx;
    if (trivial_direct != sum_sq) throw std::logic_error("skew count: trivial-count law violated");
    return c;
}

SkewCount count_grid_brute(const GridSet& grid) {
    const int n = grid.n;
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(n) + 1);
    std::vector<long long> d(static_cast<std::size_t>(n) + 1, 0);
    for (auto [x, y] : grid.points) cols[static_cast<std::size_t>(x)].push_back(y);
    for (int x = 1; x <= n; ++x) d[static_cast<std::size_t>(x)] = cols[static_cast<std::size_t>(x)].size();
    SkewCount c;
    long long trivial_direct = 0;
    for (int x = 1; x <= n; ++x) {
        for (int y : cols[static_cast<std::size_t>(x)]) {
            for (int y2 : cols[static_cast<std::size_t>(x)]) {
                const int h = y2 - y;  // h ranges over both signs
                const int xc = x + h;
                if (xc < 1 || xc > n) continue;
                c.total += d[static_cast<std::size_t>(xc)];
                if (h == 0) trivial_direct += d[static_cast<std::size_t>(x)];
            }
        }
    }
    c.nontrivial = c.total - trivial_direct;
    long long sum_sq = 0;
    for (auto dx : d) sum_sq += dx * dx;
    if (trivial_direct != sum_sq) throw std::logic_error("skew count: trivial-count law violated");
    return c;
}

}  // namespace

SkewCount count_skew_corners_brute(const SkewInstance& inst) {
    return inst.mode == InstanceMode::group ? count_group_brute(inst.family)
                                            : count_grid_brute(inst.grid);
}

Rational count_skew_corners_analytic(const ColumnFamily& fam) {
    const auto& g = fam.group();
    const RatFn d = fam.profile_fn();
    const Rational n2 = rat_pow(Rational(g.order()), 2);
    Rational sum(0);
    for (int x = 0; x < g.order(); ++x) {
        if (!fam.index().contains(x) || fam.column(x).empty()) continue;
        const RatFn ind = indicator_fn<Rational>(fam.column(x));
        const RatFn ind_shift = indicator_fn<Rational>(fam.column(x).shifted(x));
        sum += inner_product(diff_convolve(ind, ind_shift), d);
    }
    return n2 * sum;
}

CornerDensity normalized_corner_density(const ColumnFamily& fam) {
    const auto& g = fam.group();
    const long long pts = fam.total_points();
    if (pts == 0) throw std::invalid_argument("normalized_corner_density: empty family");
    RatFn f(g);
    for (int x = 0; x < g.order(); ++x) {
        if (!fam.index().contains(x) || fam.column(x).empty()) continue;
        const RatFn ind = indicator_fn<Rational>(fam.column(x));
        const RatFn ind_shift = indicator_fn<Rational>(fam.column(x).shifted(x));
        f = add(f, diff_convolve(ind, ind_shift));
    }
    CornerDensity out;
    out.eta = inner_product(mean_normalize(f), mean_normalize(fam.profile_fn()));
    SkewInstance inst;
    inst.mode = InstanceMode::group;
    inst.family = fam;
    out.bound_lhs = Rational(count_skew_corners_brute(inst).total);
    out.bound_rhs = out.eta * rat_pow(Rational(pts), 3) / rat_pow(Rational(g.order()), 2);
    out.bound_holds = out.bound_lhs >= out.bound_rhs;
    return out;
}

namespace {

SkewCount corners_group(const ColumnFamily& fam) {
    const auto& g = fam.group();
    SkewCount c;
    for (int x = 0; x < g.order(); ++x) {
        if (!fam.index().contains(x)) continue;
        const Subset& col = fam.column(x);
        if (col.empty()) continue;
        for (int h = 0; h < g.order(); ++h) {
            const int xc = g.add(x, h);
            if (!fam.index().contains(xc)) continue;
            // y with y in A_x, y+h in A_x, y in A_{x+h}
            const int m = col.intersect(col.shifted(g.neg(h))).intersect_size(fam.column(xc));
            c.total += m;
            if (h != 0) c.nontrivial += m;
        }
    }
    return c;
}

SkewCount corners_grid(const GridSet& grid) {
    const int n = grid.n;
    std::vector<std::vector<bool>> in(static_cast<std::size_t>(n) + 1,
                                      std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
    for (auto [x, y] : grid.points) in[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
    SkewCount c;
    for (auto [x, y] : grid.points) {
        for (int h = -(n - 1); h <= n - 1; ++h) {
            const int xc = x + h, yc = y + h;
            if (xc < 1 || xc > n || yc < 1 || yc > n) continue;
            if (in[static_cast<std::size_t>(x)][static_cast<std::size_t>(yc)] &&
                in[static_cast<std::size_t>(xc)][static_cast<std::size_t>(y)]) {
                c.total += 1;
                if (h != 0) c.nontrivial += 1;
            }
        }
    }
    return c;
}

}  // namespace

SkewCount count_corners_brute(const SkewInstance& inst) {
    return inst.mode == InstanceMode::group ? corners_group(inst.family) : corners_grid(inst.grid);
}

SkewInstance shift_instance(const SkewInstance& inst, int a, const std::vector<int>& b) {
    if (inst.mode == InstanceMode::group) {
        const auto& g = inst.family.group();
        if (static_cast<int>(b.size()) != g.order())
            throw std::invalid_argument("shift_instance: b must map every column");
        // The shifted family is a plain family; a declared container would not
        // survive arbitrary per-column vertical shifts.
        ColumnFamily out(g);
        for (int x = 0; x < g.order(); ++x) {
            if (!inst.family.index().contains(x)) continue;
            out.set_column(g.add(x, a), inst.family.column(x).shifted(b[static_cast<std::size_t>(x)]));
        }
        return group_instance(std::move(out));
    }
    const int n = inst.grid.n;
    GridSet out;
    out.n = n;
    for (auto [x, y] : inst.grid.points) {
        const int bx = x >= 0 && x < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(x)] : 0;
        const int nx = x + a, ny = y + bx;
        if (nx < 1 || nx > n || ny < 1 || ny > n)
            throw std::invalid_argument("shift_instance: grid shift out of range");
        out.points.emplace_back(nx, ny);
    }
    return grid_instance(std::move(out));
}

ColumnFamily embed_grid(const GridSet& grid) {
    const AbelianGroup g({2 * std::max(grid.n, 1)});
    ColumnFamily fam(g);
    for (auto [x, y] : grid.points) fam.add_point(x - 1, y - 1);
    fam.freeze();
    return fam;
}

}  // namespace skewlab
