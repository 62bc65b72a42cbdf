#pragma once

#include "chowkit/char_classes.hpp"

namespace chowkit {

/// Riemann-Roch pushforward along the projection of X x P^n onto X:
/// ch(result) = pr_*(ch(f) * Td(T_{P^n})). The owning ring must be a
/// two-factor product with exactly one projective-space factor of dimension
/// `fiber_dim`. Vanishing of higher direct images is the caller's
/// responsibility; the K-theoretic pushforward is computed regardless.
KClass grr_project(const KClass& f, int fiber_dim);

/// Structure sheaf of a regularly embedded subvariety with fundamental
/// class Z (homogeneous of degree equal to the rank of the normal bundle N):
/// ch = Td(N)^{-1} * Z.
KClass embed_structure_sheaf(const ChowClass& fundamental_class,
                             const KClass& normal);

/// Class of the projectivized subbundle P(F) inside P(E) for an exact
/// sequence 0 -> F -> E -> Q -> 0:
///   [P(F)] = sum_{i=0}^{q} c_i(Q) h^{q-i},
/// where h is the hyperplane generator of the ambient projective-bundle
/// ring and q = rank(Q). The classes of Q must already live in the ambient
/// ring.
ChowClass subbundle_class(const BundleData& q, const std::string& hyperplane);

} // namespace chowkit
