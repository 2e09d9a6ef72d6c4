#include "skewlab/subspaces.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace skewlab {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Subset materialize_members(int p, int n, const std::vector<std::vector<int>>& rows) {
    const AbelianGroup g = vector_space_group(p, n);
    Subset m(g);
    for (int x = 0; x < g.order(); ++x) {
        const auto c = g.coords(x);
        bool in = true;
        for (const auto& row : rows) {
            int dot = 0;
            for (int j = 0; j < n; ++j) dot = (dot + row[j] * c[j]) % p;
            if (dot != 0) {
                in = false;
                break;
            }
        }
        if (in) m.insert(x);
    }
    return m;
}

// Enumerate reduced-echelon r x n matrices over F_p: pick pivot columns
// c_1 < ... < c_r, then fill the free entries (right of the pivot, not in a
// pivot column) with all values.
void enumerate_rref(int p, int n, int r, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<int> pivots(static_cast<std::size_t>(r));
    std::iota(pivots.begin(), pivots.end(), 0);
    auto advance_pivots = [&]() -> bool {
        int i = r - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) return false;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    };
    while (true) {
        std::vector<std::pair<int, int>> free_pos;  // (row, col)
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int i = 0; i < r; ++i) is_pivot[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = true;
        for (int i = 0; i < r; ++i)
            for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j)
                if (!is_pivot[static_cast<std::size_t>(j)]) free_pos.emplace_back(i, j);
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(r),
                                           std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < r; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
        // Odometer over the free entries, least-significant last.
        std::vector<int> vals(free_pos.size(), 0);
        while (true) {
            for (std::size_t k = 0; k < free_pos.size(); ++k)
                rows[static_cast<std::size_t>(free_pos[k].first)][static_cast<std::size_t>(free_pos[k].second)] = vals[k];
            visit(rows);
            std::size_t k = free_pos.size();
            while (k > 0 && vals[k - 1] == p - 1) vals[--k] = 0;
            if (k == 0) break;
            ++vals[k - 1];
        }
        if (!advance_pivots()) break;
    }
}

}  // namespace

bool operator==(const Subspace& a, const Subspace& b) {
    return a.p == b.p && a.n == b.n && a.dual_basis == b.dual_basis;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.codim() != b.codim()) return a.codim() < b.codim();
    return a.dual_basis < b.dual_basis;
}

void enumerate_subspaces(int p, int n, int max_codim,
                         const std::function<void(const Subspace&)>& visit) {
    if (!is_prime(p)) throw std::invalid_argument("enumerate_subspaces: p must be prime");
    if (max_codim < 0 || max_codim > n)
        throw std::invalid_argument("enumerate_subspaces: max_codim outside [0,n]");
    for (int r = 0; r <= max_codim; ++r) {
        if (r == 0) {
            Subspace full;
            full.p = p;
            full.n = n;
            full.members = Subset::full(vector_space_group(p, n));
            visit(full);
            continue;
        }
        enumerate_rref(p, n, r, [&](const std::vector<std::vector<int>>& rows) {
            Subspace v;
            v.p = p;
            v.n = n;
            v.dual_basis = rows;
            v.members = materialize_members(p, n, rows);
            visit(v);
        });
    }
}

std::vector<Subspace> all_subspaces(int p, int n, int max_codim) {
    std::vector<Subspace> out;
    enumerate_subspaces(p, n, max_codim, [&](const Subspace& v) { out.push_back(v); });
    return out;
}

Rational coset_density(const Subset& a, const Subspace& v, int shift) {
    if (a.group() != v.members.group()) throw std::invalid_argument("coset_density: group mismatch");
    const int hits = a.shifted(a.group().neg(shift)).intersect_size(v.members);
    return Rational(hits, v.members.size());
}

std::vector<int> coset_representatives(const Subspace& v) {
    const auto& g = v.members.group();
    std::map<std::vector<int>, int> seen;
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        std::vector<int> syndrome(v.dual_basis.size(), 0);
        const auto c = g.coords(x);
        for (std::size_t i = 0; i < v.dual_basis.size(); ++i) {
            int dot = 0;
            for (int j = 0; j < v.n; ++j) dot = (dot + v.dual_basis[i][static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(j)]) % v.p;
            syndrome[i] = dot;
        }
        if (seen.emplace(std::move(syndrome), x).second) reps.push_back(x);
    }
    return reps;
}

std::pair<int, Rational> best_shift(const Subset& a, const Subspace& v) {
    int best_x = 0;
    Rational best(-1);
    for (int x : coset_representatives(v)) {
        const Rational d = coset_density(a, v, x);
        if (d > best) {
            best = d;
            best_x = x;
        }
    }
    return {best_x, best};
}

std::vector<std::vector<int>> space_basis(const Subspace& v) {
    // Pivot columns of the dual basis are determined; free columns carry one
    // basis vector each, with entries solving the pivot equations.
    const int r = v.codim();
    std::vector<int> pivot_col(static_cast<std::size_t>(r));
    std::vector<bool> is_pivot(static_cast<std::size_t>(v.n), false);
    for (int i = 0; i < r; ++i) {
        int j = 0;
        while (v.dual_basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) ++j;
        pivot_col[static_cast<std::size_t>(i)] = j;
        is_pivot[static_cast<std::size_t>(j)] = true;
    }
    std::vector<std::vector<int>> basis;
    for (int f = 0; f < v.n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<int> vec(static_cast<std::size_t>(v.n), 0);
        vec[static_cast<std::size_t>(f)] = 1;
        for (int i = 0; i < r; ++i) {
            // row_i . vec = 0  =>  vec[pivot_i] = -row_i[f]
            const int coeff = v.dual_basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
            vec[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] = (v.p - coeff) % v.p;
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

}  // namespace skewlab
