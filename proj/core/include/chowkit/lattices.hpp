#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chowkit/rational.hpp"

namespace chowkit {

/// A full-rank-or-smaller sublattice of Z^n given by a basis matrix whose
/// rows are the basis vectors, kept in Hermite normal form (row echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot)), so
/// equal lattices have equal representations.
struct IntegerLattice {
    int ambient_rank = 0;
    std::vector<std::vector<Int>> basis;

    int rank() const { return static_cast<int>(basis.size()); }
    /// |det| of the basis matrix for full-rank lattices (index in Z^n),
    /// 0 otherwise.
    Int index() const;
    bool contains(const std::vector<Int>& v) const;
    bool operator==(const IntegerLattice& other) const = default;

    nlohmann::json to_json() const;
};

/// Row-style Hermite normal form of an arbitrary integer matrix; zero rows
/// are dropped.
std::vector<std::vector<Int>> hermite_normal_form(
    std::vector<std::vector<Int>> rows);

/// Diagonal d_1 | d_2 | ... | d_r (each >= 0) of the Smith normal form.
std::vector<Int> smith_normal_form_diagonal(
    std::vector<std::vector<Int>> m);

/// The sublattice {v in Z^n : coeffs . v == 0 mod modulus}. Its index in
/// Z^n is modulus / gcd(modulus, gcd(coeffs)).
IntegerLattice congruence_sublattice(const std::vector<Int>& coeffs,
                                     const Int& modulus);

/// Invariant factors of Z^ambient / sub, one entry per ambient dimension
/// (0 marks a free direction, divisibility d_1 | d_2 | ...).
std::vector<Int> smith_invariants(const IntegerLattice& sub, int ambient_rank);

/// Smallest positive k with det^k linearizable for the group action on the
/// parameter space of m equidegree-d complete intersections in P^n, and the
/// matching determinant power p:
///   k = lcm(n+1, m d)/(m d),  p = lcm(n+1, m d)/(n+1),  k m d = p (n+1).
struct LinearizationExponents {
    Int k;
    Int p;
};
LinearizationExponents linearization_exponents(const Int& d, const Int& m,
                                               const Int& n);

} // namespace chowkit
