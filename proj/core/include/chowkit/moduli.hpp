#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chowkit/grr.hpp"
#include "chowkit/lattices.hpp"

namespace chowkit {

/// Degree of the divisor of singular members in the parameter space of
/// complete intersections of m hypersurfaces of degree d in P^n:
///   sum_{i=0}^{n-m+1} (-1)^i C(n+1,i) C(n+1-i,m) d^{n-i}.
/// Requires 0 < m < n and d >= 1.
Int equidegree_discriminant_degree(int d, int m, int n);

/// Class of the divisor of singular bidegree-(a,b) complete intersections
/// in P^n, expressed on the two hyperplane generators of the parameter
/// space (a projective bundle over the space of degree-a hypersurfaces):
/// coeff_base on the pulled-back base hyperplane, coeff_fiber on the fiber
/// hyperplane. The intermediate sums A, B, C are exposed for inspection:
///   coeff_base = ab*B + b*A,  coeff_fiber = ab*C + a*A.
/// Requires 0 < a < b and n > 0.
struct DiscriminantClass {
    Int coeff_base;
    Int coeff_fiber;
    Int A, B, C;

    nlohmann::json to_json() const;
};
DiscriminantClass bidegree_discriminant_class(int a, int b, int n);

/// Named presentation of a Picard group: free-or-torsion basis elements,
/// invariant factors (0 = free direction), expressions of named divisor
/// classes as integer vectors in the basis, and the external assumptions in
/// force.
struct PicardPresentation {
    std::vector<std::string> basis;
    std::vector<Int> invariant_factors;
    std::map<std::string, std::vector<Int>> named_classes;
    std::vector<std::string> axioms;

    nlohmann::json to_json() const;
};

/// Picard group of the locus of smooth equidegree complete intersections:
/// cyclic, generated by "Phi", of order
/// equidegree_discriminant_degree(d,m,n) / k with k the linearization
/// exponent. The divisibility is asserted; a failure would be an integrity
/// error.
PicardPresentation smooth_locus_picard(int d, int m, int n);

/// Both reading conventions for which coefficient of (a, b) pairs with the
/// fiber exponent in the linearizability congruence of the bidegree
/// parameter space. They agree whenever a = b mod (n+1)-coprimality works
/// out (they do for (2,3,4)); the engine computes both and reports.
enum class FiberCoefficientConvention {
    proof,      // fiber exponent weighted by b, base exponent by a
    statement,  // fiber exponent weighted by a, base exponent by b
};

struct BidegreePicardLattice {
    IntegerLattice lattice;          // in (fiber, base) exponent coordinates
    IntegerLattice other_convention; // the lattice the other reading gives
    FiberCoefficientConvention convention;
    bool conventions_agree = false;

    nlohmann::json to_json() const;
};
BidegreePicardLattice bidegree_picard_lattice(
    int a, int b, int n,
    FiberCoefficientConvention convention = FiberCoefficientConvention::proof);

/// Everything the lines-in-surfaces computation produces, for display and
/// testing. The Riemann-Roch arithmetic runs over the product of P^3 with a
/// relation-free cover of the Grassmannian ring, so the Chern character and
/// Chern class representatives come out as honest polynomials in s1, s2;
/// they are then mapped into the Grassmannian presentation, where the top
/// class integrates against the Schubert point.
struct LinesDivisorReport {
    int d;
    Ring cover;          // free ring on s1, s2
    Ring grassmannian;   // Z[s1,s2]/(h3,h4)
    KClass ch;                          // over `cover`
    std::vector<ChowClass> chern_cover; // c_1..c_4 over `cover`
    std::vector<ChowClass> chern;       // c_1..c_4 mapped into `grassmannian`
    ChowClass fundamental_class;        // [P(T)] over product(P^3, cover)
    Rational integral;                  // of c_4 over the Grassmannian

    nlohmann::json to_json(bool show_chern) const;
};
LinesDivisorReport lines_in_surfaces_report(int d);

/// Degree of the divisor, in the space of degree-d surfaces in P^3, of
/// surfaces containing a line: the integral over the Grassmannian of lines
/// of c_4 of the pushed-forward sections bundle. d = 4 gives 320 (quartics
/// containing a line), d = 3 gives 27 (lines on a cubic surface), d = 2
/// gives 0. Requires d >= 2.
Int lines_in_surfaces_divisor_degree(int d);

/// Euler characteristic chi(X, L^p) = p^2 l + 2 for a K3 surface with a
/// quasi-polarization L of self-intersection 2l. Requires l >= 2. For
/// l = 2 the value is cross-checked against the Riemann-Roch pipeline
/// through a quartic surface in P^3; a mismatch raises an integrity error.
Int k3_euler_characteristic(int l, int p);

/// chi(X, O_X(p)) for a quartic surface X in P^3 computed by the engine:
/// embed the structure sheaf (normal bundle O(4)), twist by O(p), push
/// forward to a point.
Int quartic_line_bundle_chi_via_grr(int p);

/// Assembled Picard presentation of the moduli stack of quasi-polarized K3
/// surfaces of degree 2l (2l in {4, 6, 8}): the named basis of
/// Noether-Lefschetz divisors and the Hodge class, together with the
/// restricted divisor classes produced by the formula operations above (not
/// hard-coded). The freeness of the basis rests on an external rank bound,
/// recorded in `axioms`.
PicardPresentation k3_picard_table(int two_l);

} // namespace chowkit
