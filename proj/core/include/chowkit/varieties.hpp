#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowkit/chow_class.hpp"

namespace chowkit {

/// The trivial ring of a point: no generators, dimension 0, integral of 1
/// equal to 1.
Ring point_ring();

/// Z[t]/(t^{n+1}) with integral of t^n equal to 1. n >= 1; the degenerate
/// n = 0 call is rejected, use point_ring() instead.
Ring projective_space(int n, const std::string& gen = "t");

/// The Chow ring of the Grassmannian of lines in P^3 (equivalently of
/// 2-planes in a 4-space): Z[s1,s2]/(h3,h4) with h3 = s1^3 - 2 s1 s2 and
/// h4 = s1^4 - 3 s1^2 s2 + s2^2, where s1, s2 are the Chern classes of the
/// tautological quotient bundle. Dimension 4, point monomial s2^2 with
/// integral 1; the induced Schubert integrals are s1^4 -> 2 and
/// s1^2 s2 -> 1.
///
/// Internally the two defining relations are completed to the reduced
/// rewrite system {s1^3 -> 2 s1 s2, s1^2 s2 -> s2^2, s1 s2^2 -> 0,
/// s2^3 -> 0} (same ideal), so every monomial has a unique normal form at
/// all degrees, not just up to the dimension.
Ring grassmannian_lines_in_p3();

/// Polynomial ring on the given graded generators with no relations other
/// than truncation above `dimension`, and no point monomial. Handy as the
/// universal target for symmetric-function identities.
Ring free_graded_ring(const std::string& name,
                      std::vector<GeneratorInfo> generators, int dimension);

/// Kuenneth product: generators and relations concatenated, dimension the
/// sum, point the product of points. Clashing generator names from the
/// right factor are renamed deterministically (single letters advance
/// through the alphabet, otherwise a prime is appended).
Ring product(Ring x, Ring y);

/// An honest vector bundle presented by its total Chern class: chern[i] is
/// c_{i+1}, homogeneous of degree i+1 over `ring`.
struct BundleData {
    Ring ring;
    int rank = 0;
    std::vector<ChowClass> chern;

    static BundleData trivial(Ring ring, int rank);
    /// c_{i} for any i >= 0 (c_0 = 1, zero above the stored classes).
    ChowClass chern_class(int i) const;
    /// Every c_i must be homogeneous of degree i over `ring`.
    void validate() const;
};

/// Projective bundle of a rank-r bundle E over `base`: adds a degree-1
/// generator (most significant in the rewrite order) with the relation
/// h^r = -(c_1(E) h^{r-1} + ... + c_r(E)); dimension base + r - 1; point
/// h^{r-1} times the base point.
Ring projective_bundle(Ring base, const BundleData& e,
                       const std::string& gen_name = "h");

/// Coefficient of the ring's point monomial in the normal form of `a`,
/// times the declared integral of the point. Components of degree below the
/// dimension are ignored by definition.
Rational integrate(const ChowClass& a);

/// Pushforward along the projection of a two-factor product onto the factor
/// with index `onto`, discarding a projective-space (or point) factor of
/// fiber dimension f: keeps the coefficient of (fiber hyperplane)^f and
/// maps the rest into the retained factor; lower fiber powers push to zero.
ChowClass pushforward_projection(const ChowClass& a, int onto);

/// Re-expresses a class in `target`, matching generators by name (and
/// degree); the result is reduced by the target's relations.
ChowClass transfer(const ChowClass& a, Ring target);

/// Same with an explicit renaming applied first (source name -> target
/// name; names absent from the map are kept).
ChowClass transfer(const ChowClass& a, Ring target,
                   const std::map<std::string, std::string>& rename);

} // namespace chowkit
