#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewlab/rng.hpp"

namespace skewlab {

// A finite abelian group presented as Z/n_1 x ... x Z/n_k. Elements are
// addressed by their mixed-radix rank (row-major over factors, first factor
// most significant). The dual group is indexed by the same coordinate space.
class AbelianGroup {
public:
    AbelianGroup() = default;

    explicit AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw std::invalid_argument("AbelianGroup: empty factor list");
        order_ = 1;
        for (int n : factors_) {
            if (n < 1) throw std::invalid_argument("AbelianGroup: factor < 1");
            order_ *= static_cast<long long>(n);
            if (order_ > (1 << 26)) throw std::invalid_argument("AbelianGroup: order too large");
        }
        strides_.assign(factors_.size(), 1);
        for (int j = static_cast<int>(factors_.size()) - 2; j >= 0; --j)
            strides_[j] = strides_[j + 1] * factors_[j + 1];
    }

    const std::vector<int>& factors() const { return factors_; }
    int num_factors() const { return static_cast<int>(factors_.size()); }
    int order() const { return static_cast<int>(order_); }

    std::vector<int> coords(int rank) const {
        std::vector<int> c(factors_.size());
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            c[j] = static_cast<int>((rank / strides_[j]) % factors_[j]);
        }
        return c;
    }

    // Coordinates reduce mod n_j; reduction is idempotent.
    int rank_of(const std::vector<int>& c) const {
        if (c.size() != factors_.size()) throw std::invalid_argument("rank_of: shape mismatch");
        long long r = 0;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            long long v = c[j] % factors_[j];
            if (v < 0) v += factors_[j];
            r += v * strides_[j];
        }
        return static_cast<int>(r);
    }

    int add(int a, int b) const {
        long long r = 0;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            const int n = factors_[j];
            const int ca = static_cast<int>((a / strides_[j]) % n);
            const int cb = static_cast<int>((b / strides_[j]) % n);
            int s = ca + cb;
            if (s >= n) s -= n;
            r += static_cast<long long>(s) * strides_[j];
        }
        return static_cast<int>(r);
    }

    int neg(int a) const {
        long long r = 0;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            const int n = factors_[j];
            const int ca = static_cast<int>((a / strides_[j]) % n);
            const int s = ca == 0 ? 0 : n - ca;
            r += static_cast<long long>(s) * strides_[j];
        }
        return static_cast<int>(r);
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

    std::string describe() const {
        std::string s;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            if (j) s += "x";
            s += "Z/" + std::to_string(factors_[j]);
        }
        return s;
    }

private:
    std::vector<int> factors_;
    long long order_ = 0;
    std::vector<long long> strides_;
};

inline AbelianGroup make_group(const std::vector<int>& factors) { return AbelianGroup(factors); }

// F_p^n as an additive group; prime-power fields q = p^e are represented
// additively as (Z/p)^{en}. The zero-dimensional space is the trivial group.
inline AbelianGroup vector_space_group(int p, int n) {
    if (n == 0) return AbelianGroup({1});
    return AbelianGroup(std::vector<int>(static_cast<std::size_t>(n), p));
}

// Dense subset of a group, keyed by element rank. Mutable while being built,
// then typically frozen by its owner; all set algebra returns fresh values.
class Subset {
public:
    Subset() = default;
    explicit Subset(const AbelianGroup& g) : group_(g), words_((g.order() + 63) / 64, 0) {}

    static Subset full(const AbelianGroup& g) {
        Subset s(g);
        for (int x = 0; x < g.order(); ++x) s.insert(x);
        return s;
    }

    static Subset of(const AbelianGroup& g, const std::vector<int>& ranks) {
        Subset s(g);
        for (int r : ranks) s.insert(r);
        return s;
    }

    const AbelianGroup& group() const { return group_; }

    bool contains(int x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }

    void insert(int x) {
        if (x < 0 || x >= group_.order()) throw std::invalid_argument("Subset::insert: out of range");
        words_[x >> 6] |= (1ull << (x & 63));
    }

    void erase(int x) { words_[x >> 6] &= ~(1ull << (x & 63)); }

    int size() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::vector<int> members() const {
        std::vector<int> m;
        m.reserve(size());
        for (int x = 0; x < group_.order(); ++x)
            if (contains(x)) m.push_back(x);
        return m;
    }

    Subset intersect(const Subset& o) const {
        require_same(o);
        Subset r(group_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    Subset unite(const Subset& o) const {
        require_same(o);
        Subset r(group_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    int intersect_size(const Subset& o) const {
        require_same(o);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += __builtin_popcountll(words_[i] & o.words_[i]);
        return c;
    }

    // |(this - shift) cap members|, allocation-free; `members` must hold
    // ranks of this subset's group.
    int shifted_intersect_size(int shift, const std::vector<int>& members) const {
        int c = 0;
        for (int m : members)
            if (contains(group_.add(m, shift))) ++c;
        return c;
    }

    bool subset_of(const Subset& o) const {
        require_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // {a + g : a in A}
    Subset shifted(int g) const {
        Subset r(group_);
        for (int x = 0; x < group_.order(); ++x)
            if (contains(x)) r.insert(group_.add(x, g));
        return r;
    }

    // {-a : a in A}
    Subset negated() const {
        Subset r(group_);
        for (int x = 0; x < group_.order(); ++x)
            if (contains(x)) r.insert(group_.neg(x));
        return r;
    }

    bool operator==(const Subset& o) const { return group_ == o.group_ && words_ == o.words_; }

private:
    void require_same(const Subset& o) const {
        if (group_ != o.group_) throw std::invalid_argument("Subset: group mismatch");
    }

    AbelianGroup group_;
    std::vector<std::uint64_t> words_;
};

inline Subset random_subset(const AbelianGroup& g, double density, Rng& rng) {
    Subset s(g);
    for (int x = 0; x < g.order(); ++x)
        if (rng.coin(density)) s.insert(x);
    return s;
}

inline Subset random_nonempty_subset(const AbelianGroup& g, double density, Rng& rng) {
    Subset s = random_subset(g, density, rng);
    if (s.empty()) s.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order()))));
    return s;
}

}  // namespace skewlab
