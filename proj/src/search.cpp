#include "skewlab/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewlab {

bool verify_scf(const SkewInstance& inst) { return count_skew_corners_brute(inst).nontrivial == 0; }

namespace {

// Shared incremental state for grid and group search. Grid mode uses
// column/row indices 1..n with no wraparound; group mode works on ranks with
// group arithmetic.
struct Incremental {
    // grid mode when g == nullptr
    const AbelianGroup* g = nullptr;
    int n = 0;
    std::vector<std::vector<bool>> cols;  // cols[x][y]
    std::vector<int> col_size;

    explicit Incremental(int grid_n)
        : n(grid_n),
          cols(static_cast<std::size_t>(grid_n) + 1,
               std::vector<bool>(static_cast<std::size_t>(grid_n) + 1, false)),
          col_size(static_cast<std::size_t>(grid_n) + 1, 0) {}

    explicit Incremental(const AbelianGroup& grp)
        : g(&grp),
          n(grp.order()),
          cols(static_cast<std::size_t>(grp.order()),
               std::vector<bool>(static_cast<std::size_t>(grp.order()), false)),
          col_size(static_cast<std::size_t>(grp.order()), 0) {}

    bool col_in_range(int x) const { return g ? true : (x >= 1 && x <= n); }
    int col_at(int x, int h) const { return g ? g->add(x, h) : x + h; }
    int row_at(int y, int h) const { return g ? g->add(y, h) : y + h; }
    bool row_in_range(int y) const { return g ? true : (y >= 1 && y <= n); }

    // Would inserting (x, y) create a nontrivial skew corner? Only patterns
    // through the new point need checking.
    bool blocked(int x, int y) const {
        const auto& mycol = cols[static_cast<std::size_t>(x)];
        // New point as (x, y) or (x, y+h) of the column pair: partner y2 in
        // the same column, any point in column x +- (y2 - y) completes it.
        for (int y2 = g ? 0 : 1; y2 < static_cast<int>(mycol.size()); ++y2) {
            if (!mycol[static_cast<std::size_t>(y2)] || y2 == y) continue;
            int h = g ? g->sub(y2, y) : y2 - y;
            int c = col_at(x, h);
            if (col_in_range(c) && col_size[static_cast<std::size_t>(c)] > 0) return true;
            h = g ? g->sub(y, y2) : y - y2;
            c = col_at(x, h);
            if (col_in_range(c) && col_size[static_cast<std::size_t>(c)] > 0) return true;
        }
        // New point as the free third point (x, y) = (c + h, y'): a column c
        // with a pair at distance h = x - c blocks it.
        for (int c = g ? 0 : 1; c < static_cast<int>(cols.size()); ++c) {
            if (c == x || col_size[static_cast<std::size_t>(c)] < 2) continue;
            const int h = g ? g->sub(x, c) : x - c;
            if (h == 0) continue;
            const auto& cc = cols[static_cast<std::size_t>(c)];
            for (int y1 = g ? 0 : 1; y1 < static_cast<int>(cc.size()); ++y1) {
                if (!cc[static_cast<std::size_t>(y1)]) continue;
                const int y3 = row_at(y1, h);
                if (row_in_range(y3) && cc[static_cast<std::size_t>(y3)]) return true;
            }
        }
        return false;
    }

    void insert(int x, int y) {
        cols[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
        ++col_size[static_cast<std::size_t>(x)];
    }
    void erase(int x, int y) {
        cols[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = false;
        --col_size[static_cast<std::size_t>(x)];
    }
};

struct Searcher {
    const std::vector<std::pair<int, int>>& pts;
    Incremental& inc;
    long long budget;
    long long nodes = 0;
    bool exhausted_budget = false;
    int best = -1;
    std::vector<std::pair<int, int>> best_set = {};
    std::vector<std::pair<int, int>> chosen = {};

    void run(std::size_t idx) {
        ++nodes;
        if (budget >= 0 && nodes > budget) {
            exhausted_budget = true;
            return;
        }
        if (static_cast<int>(chosen.size() + (pts.size() - idx)) <= best) return;
        if (idx == pts.size()) {
            if (static_cast<int>(chosen.size()) > best) {
                best = static_cast<int>(chosen.size());
                best_set = chosen;
            }
            return;
        }
        const auto [x, y] = pts[idx];
        if (!inc.blocked(x, y)) {
            inc.insert(x, y);
            chosen.push_back({x, y});
            run(idx + 1);
            chosen.pop_back();
            inc.erase(x, y);
            if (exhausted_budget) return;
        }
        run(idx + 1);
    }
};

}  // namespace

SearchResult exact_max_scf_grid(int n, long long node_budget) {
    if (n < 1) throw std::invalid_argument("exact_max_scf_grid: n must be >= 1");
    std::vector<std::pair<int, int>> pts;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) pts.push_back({x, y});
    Incremental inc(n);
    Searcher s{pts, inc, node_budget};
    s.run(0);
    SearchResult out;
    out.instance = "grid n=" + std::to_string(n);
    out.best_size = s.best;
    out.witness = s.best_set;
    out.optimal = !s.exhausted_budget;
    out.nodes = s.nodes;
    return out;
}

SearchResult exact_max_scf_group(const AbelianGroup& g,
                                 const std::vector<std::pair<int, int>>* window,
                                 long long node_budget) {
    std::vector<std::pair<int, int>> pts;
    if (window) {
        pts = *window;
    } else {
        for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < g.order(); ++y) pts.push_back({x, y});
    }
    Incremental inc(g);
    Searcher s{pts, inc, node_budget};
    s.run(0);
    SearchResult out;
    out.instance = "group " + g.describe();
    out.best_size = s.best;
    out.witness = s.best_set;
    out.optimal = !s.exhausted_budget;
    out.nodes = s.nodes;
    return out;
}

SearchResult greedy_scf_grid(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("greedy_scf_grid: n must be >= 1");
    Rng rng{seed, 0};
    Incremental inc(n);
    SearchResult out;
    out.instance = "greedy grid n=" + std::to_string(n);
    const int row = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    for (int x = 1; x <= n; ++x) {
        inc.insert(x, row);
        out.witness.push_back({x, row});
    }
    std::vector<std::pair<int, int>> rest;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (y != row) rest.push_back({x, y});
    for (std::size_t i = rest.size(); i > 1; --i)
        std::swap(rest[i - 1], rest[static_cast<std::size_t>(rng.below(i))]);
    for (const auto& [x, y] : rest) {
        if (!inc.blocked(x, y)) {
            inc.insert(x, y);
            out.witness.push_back({x, y});
        }
    }
    std::sort(out.witness.begin(), out.witness.end());
    out.best_size = static_cast<int>(out.witness.size());
    out.optimal = false;
    return out;
}

}  // namespace skewlab
