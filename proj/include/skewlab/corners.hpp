#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewlab/group.hpp"
#include "skewlab/group_function.hpp"

namespace skewlab {

// The columns of a set A in G x G: A_g = { y : (g, y) in A } for g in the
// index set C, together with an optional declared container R that every
// column must lie in. Mutable while being assembled, frozen before any
// counting; counters and checkers treat frozen instances as immutable.
class ColumnFamily {
public:
    ColumnFamily() = default;
    explicit ColumnFamily(const AbelianGroup& g)
        : group_(g), index_(g), columns_(static_cast<std::size_t>(g.order()), Subset(g)) {}

    const AbelianGroup& group() const { return group_; }
    const Subset& index() const { return index_; }
    const Subset& column(int g) const { return columns_[static_cast<std::size_t>(g)]; }
    const std::optional<Subset>& container() const { return container_; }

    void set_container(Subset r) {
        require_mutable();
        container_ = std::move(r);
    }

    void set_column(int g, Subset a) {
        require_mutable();
        index_.insert(g);
        columns_[static_cast<std::size_t>(g)] = std::move(a);
    }

    void add_point(int g, int y) {
        require_mutable();
        index_.insert(g);
        columns_[static_cast<std::size_t>(g)].insert(y);
    }

    void freeze();
    bool frozen() const { return frozen_; }

    // D(x) = |A_x| for x in C, 0 otherwise.
    std::vector<long long> profile() const;
    RatFn profile_fn() const;

    long long total_points() const;        // |A| = sum |A_g|
    Rational sum_sq_densities() const;     // sum (|A_g|/|G|)^2

private:
    void require_mutable() const {
        if (frozen_) throw std::logic_error("ColumnFamily: frozen");
    }

    AbelianGroup group_;
    Subset index_;
    std::vector<Subset> columns_;
    std::optional<Subset> container_;
    bool frozen_ = false;
};

// A point set in the integer grid [1, n] x [1, n].
struct GridSet {
    int n = 0;
    std::vector<std::pair<int, int>> points;  // 1-based, deduplicated on freeze
};

enum class InstanceMode { group, grid };

struct SkewInstance {
    InstanceMode mode = InstanceMode::group;
    ColumnFamily family;  // group mode
    GridSet grid;         // grid mode
};

SkewInstance group_instance(ColumnFamily fam);
SkewInstance grid_instance(GridSet g);

struct SkewCount {
    long long total = 0;
    long long nontrivial = 0;
};

// All quadruples (x, y, y', h) whose three pattern points lie in the set;
// nontrivial excludes h = 0. Iterates (x, y, h) and multiplies by |A_{x+h}|,
// so O(|G|^3) rather than O(|G|^4). total - nontrivial = sum_x |A_x|^2 is
// verified internally.
SkewCount count_skew_corners_brute(const SkewInstance& inst);

// |G|^2 sum_x <1_{A_x} o 1_{A_x + x}, D> in exact rationals; equals the
// brute total on every group instance.
Rational count_skew_corners_analytic(const ColumnFamily& fam);

struct CornerDensity {
    Rational eta;        // <mu_F, mu_D> with F = sum_x 1_{A_x} o 1_{A_x + x}
    Rational bound_lhs;  // brute total
    Rational bound_rhs;  // eta |A|^3 / |G|^2
    bool bound_holds = false;
};

CornerDensity normalized_corner_density(const ColumnFamily& fam);

// Classical corners: y' = y forced.
SkewCount count_corners_brute(const SkewInstance& inst);

// (x, y) -> (x + a, y + b(x)); b maps original column rank to a vertical
// shift. Grid mode only supports shifts that keep every point in range.
SkewInstance shift_instance(const SkewInstance& inst, int a, const std::vector<int>& b);

// [n] x [n] into Z/2n x Z/2n (0-based residues); nontrivial counts agree.
ColumnFamily embed_grid(const GridSet& grid);

}  // namespace skewlab
