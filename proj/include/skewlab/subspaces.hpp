#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "skewlab/group.hpp"
#include "skewlab/rational.hpp"

namespace skewlab {

// A subspace of F_p^n of co-dimension r, represented by the unique
// reduced-echelon basis of its annihilator (r independent functionals).
// V = { x : <l_i, x> = 0 mod p for all i }, |V| = p^(n-r).
struct Subspace {
    int p = 2;
    int n = 0;
    std::vector<std::vector<int>> dual_basis;  // r x n, reduced echelon
    Subset members;

    int codim() const { return static_cast<int>(dual_basis.size()); }
    int dim() const { return n - codim(); }
};

bool operator==(const Subspace& a, const Subspace& b);

// Canonical order: co-dimension, then pivot columns, then free entries.
bool subspace_less(const Subspace& a, const Subspace& b);

// Visits each subspace of co-dimension 0..max_codim exactly once, in
// canonical order. The per-codimension counts are the Gaussian binomials.
void enumerate_subspaces(int p, int n, int max_codim,
                         const std::function<void(const Subspace&)>& visit);

std::vector<Subspace> all_subspaces(int p, int n, int max_codim);

// |(A - x) cap V| / |V|, exact.
Rational coset_density(const Subset& a, const Subspace& v, int shift);

// Maximizing shift over one representative per coset (density is constant on
// cosets); ties broken by smallest element rank.
std::pair<int, Rational> best_shift(const Subset& a, const Subspace& v);

// Smallest-rank representative of each coset of V, in syndrome order of
// first appearance (i.e. ascending representative rank).
std::vector<int> coset_representatives(const Subspace& v);

// Basis of V itself (n - r vectors), used to map V onto F_p^(dim V).
std::vector<std::vector<int>> space_basis(const Subspace& v);

}  // namespace skewlab
