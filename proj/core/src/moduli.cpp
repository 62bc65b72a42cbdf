#include "chowkit/moduli.hpp"

#include <nlohmann/json.hpp>

#include "chowkit/errors.hpp"

namespace chowkit {

namespace {

Int int_pow(const Int& base, int exp) {
    Int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

nlohmann::json json_int(const Int& v) {
    // Exact integers: a JSON number while it fits, a decimal string beyond.
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi)
        return nlohmann::json(v.convert_to<std::int64_t>());
    return nlohmann::json(v.str());
}

nlohmann::json json_int_vector(const std::vector<Int>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(json_int(x));
    return out;
}

} // namespace

Int equidegree_discriminant_degree(int d, int m, int n) {
    if (!(0 < m && m < n))
        throw precondition_error("require 0 < m < n");
    if (d < 1) throw precondition_error("require d >= 1");
    Int sum = 0;
    for (int i = 0; i <= n - m + 1; ++i) {
        const Int term =
            binomial(n + 1, i) * binomial(n + 1 - i, m) * int_pow(d, n - i);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

DiscriminantClass bidegree_discriminant_class(int a, int b, int n) {
    if (!(0 < a && a < b))
        throw precondition_error("require 0 < a < b");
    if (n <= 0) throw precondition_error("require n > 0");
    const Int ia = a, ib = b;

    Int A = 0;
    for (int i = 0; i <= n - 1; ++i)
        for (int k = 0; k <= n - 1 - i; ++k) {
            const Int term =
                binomial(n + 1, i) * int_pow(ia, n - 1 - i - k) * int_pow(ib, k);
            A += (i % 2 == 0) ? term : -term;
        }
    Int B = 0;
    for (int i = 0; i <= n - 2; ++i)
        for (int k = 0; k <= n - 2 - i; ++k) {
            const Int term = binomial(n + 1, i) * Int(n - 1 - i - k) *
                             int_pow(ia, n - 2 - i - k) * int_pow(ib, k);
            B += (i % 2 == 0) ? term : -term;
        }
    Int C = 0;
    for (int i = 0; i <= n - 2; ++i)
        for (int k = 1; k <= n - 1 - i; ++k) {
            const Int term = binomial(n + 1, i) * Int(k) *
                             int_pow(ia, n - 1 - i - k) * int_pow(ib, k - 1);
            C += (i % 2 == 0) ? term : -term;
        }

    DiscriminantClass out;
    out.A = A;
    out.B = B;
    out.C = C;
    out.coeff_base = ia * ib * B + ib * A;
    out.coeff_fiber = ia * ib * C + ia * A;
    return out;
}

nlohmann::json DiscriminantClass::to_json() const {
    nlohmann::json out;
    out["A"] = json_int(A);
    out["B"] = json_int(B);
    out["C"] = json_int(C);
    out["coeff_base"] = json_int(coeff_base);
    out["coeff_fiber"] = json_int(coeff_fiber);
    return out;
}

nlohmann::json PicardPresentation::to_json() const {
    nlohmann::json named = nlohmann::json::object();
    for (const auto& [name, coords] : named_classes)
        named[name] = json_int_vector(coords);
    nlohmann::json out;
    out["basis"] = basis;
    out["invariant_factors"] = json_int_vector(invariant_factors);
    out["named_classes"] = named;
    out["axioms"] = axioms;
    return out;
}

PicardPresentation smooth_locus_picard(int d, int m, int n) {
    const auto exps = linearization_exponents(d, m, n);
    const Int degree = equidegree_discriminant_degree(d, m, n);
    if (degree % exps.k != 0)
        throw integrity_error(
            "discriminant degree " + degree.str() +
            " is not divisible by the linearization exponent k = " +
            exps.k.str());
    PicardPresentation out;
    out.basis = {"Phi"};
    out.invariant_factors = {degree / exps.k};
    out.named_classes["discriminant"] = {Int(0)};
    return out;
}

BidegreePicardLattice bidegree_picard_lattice(
    int a, int b, int n, FiberCoefficientConvention convention) {
    if (!(0 < a && a < b))
        throw precondition_error("require 0 < a < b");
    if (n <= 0) throw precondition_error("require n > 0");
    // Coordinates are (fiber exponent, base exponent). The linearizability
    // congruence weights the fiber exponent by the degree of the forms in
    // the fiber (b) and the base exponent by the degree of the base forms
    // (a); the other reading swaps the two weights.
    const std::vector<Int> proof_coeffs{Int(b), Int(a)};
    const std::vector<Int> statement_coeffs{Int(a), Int(b)};
    const Int modulus = n + 1;

    BidegreePicardLattice out;
    out.convention = convention;
    const bool use_proof = convention == FiberCoefficientConvention::proof;
    out.lattice = congruence_sublattice(
        use_proof ? proof_coeffs : statement_coeffs, modulus);
    out.other_convention = congruence_sublattice(
        use_proof ? statement_coeffs : proof_coeffs, modulus);
    out.conventions_agree = out.lattice == out.other_convention;
    return out;
}

nlohmann::json BidegreePicardLattice::to_json() const {
    nlohmann::json out;
    out["convention"] = convention == FiberCoefficientConvention::proof
                            ? "proof"
                            : "statement";
    out["lattice"] = lattice.to_json();
    out["index"] = json_int(lattice.index());
    out["conventions_agree"] = conventions_agree;
    if (!conventions_agree)
        out["other_convention_lattice"] = other_convention.to_json();
    return out;
}

LinesDivisorReport lines_in_surfaces_report(int d) {
    if (d < 2) throw precondition_error("require d >= 2");

    // The arithmetic runs over P^3 x (relation-free s1, s2) so that the
    // intermediate characters come out as plain polynomials; Schubert
    // relations are imposed only when integrating.
    const Ring cover = free_graded_ring("Z[s1,s2]", {{"s1", 1}, {"s2", 2}}, 4);
    const Ring grassmannian = grassmannian_lines_in_p3();
    const Ring total = product(projective_space(3), cover);

    const ChowClass t = ChowClass::generator(total, "t");
    const ChowClass s1 = ChowClass::generator(total, "s1");
    const ChowClass s2 = ChowClass::generator(total, "s2");

    // Tautological quotient bundle, pulled back to the product.
    const BundleData taut_quotient{total, 2, {s1, s2}};

    // [P(T)] inside P^3 x Gr via the subbundle class of the quotient.
    const ChowClass fundamental = subbundle_class(taut_quotient, "t");

    // Structure sheaf of P(T): normal bundle is the quotient twisted by the
    // hyperplane of P^3.
    const KClass normal = twist(chern_character_from_classes(taut_quotient), t);
    const KClass structure_sheaf = embed_structure_sheaf(fundamental, normal);

    // Sections of degree d along the lines: twist by O(d) and push down.
    const KClass sections =
        grr_project(twist(structure_sheaf, t * Rational(d)), 3);

    const BundleData chern = chern_classes_from_character(sections);
    std::vector<ChowClass> chern_cover(chern.chern.begin(), chern.chern.end());
    std::vector<ChowClass> chern_reduced;
    for (const auto& c : chern_cover)
        chern_reduced.push_back(transfer(c, grassmannian));
    const Rational integral = integrate(chern_reduced.at(3));

    return LinesDivisorReport{d,
                              cover,
                              grassmannian,
                              sections,
                              std::move(chern_cover),
                              std::move(chern_reduced),
                              fundamental,
                              integral};
}

Int lines_in_surfaces_divisor_degree(int d) {
    return to_int(lines_in_surfaces_report(d).integral);
}

nlohmann::json LinesDivisorReport::to_json(bool show_chern) const {
    nlohmann::json out;
    out["d"] = d;
    out["integral"] = json_int(to_int(integral));
    out["rank"] = json_int(to_int(ch.ch().degree_zero_part()));
    if (show_chern) {
        for (int k = 0; k <= 4; ++k)
            out["ch" + std::to_string(k)] = ch.component(k).canonical_string();
        for (int i = 1; i <= 4; ++i)
            out["c" + std::to_string(i)] =
                chern_cover.at(i - 1).factored_string();
        out["fundamental_class"] = fundamental_class.canonical_string();
    }
    return out;
}

Int quartic_line_bundle_chi_via_grr(int p) {
    const Ring total = product(point_ring(), projective_space(3));
    const ChowClass t = ChowClass::generator(total, "t");
    const KClass structure_sheaf =
        embed_structure_sheaf(t * Rational(4), line_bundle(t * Rational(4)));
    const KClass twisted = twist(structure_sheaf, t * Rational(p));
    return grr_project(twisted, 3).rank();
}

Int k3_euler_characteristic(int l, int p) {
    if (l < 2) throw precondition_error("require l >= 2");
    if (p < 0) throw precondition_error("require p >= 0");
    const Int chi = Int(p) * p * l + 2;
    if (l == 2) {
        const Int via_grr = quartic_line_bundle_chi_via_grr(p);
        if (via_grr != chi)
            throw integrity_error("Riemann-Roch cross-check failed: " +
                                  via_grr.str() + " vs " + chi.str());
    }
    return chi;
}

namespace {

std::string rank_bound_axiom(int rank) {
    return "external rank bound: the span of Noether-Lefschetz divisors in "
           "the rational Picard group has rank >= " +
           std::to_string(rank) +
           " (Bruinier, Compositio Math. 133 (2002)); injectivity of the "
           "divisor classes, hence freeness of this basis, rests on it";
}

const char* kDiscriminantAxiom =
    "identification: D_{0,0} restricted to the birational-model locus is the "
    "divisor of singular projective models (fixed correspondence)";

const char* kUniqueLineAxiom =
    "multiplicity one: a generic quartic surface containing a line contains "
    "exactly one line, so the lines-divisor pushforward has multiplicity 1 "
    "(assumed, not verified)";

const char* kSingularQuadricAxiom =
    "identification: D_{3,1} restricted corresponds to complete "
    "intersections of a singular quadric and a cubic (fixed correspondence)";

} // namespace

PicardPresentation k3_picard_table(int two_l) {
    PicardPresentation out;
    switch (two_l) {
    case 4: {
        out.basis = {"D_{1,1}", "D_{2,1}", "lambda_1"};
        out.invariant_factors = {0, 0, 0};
        const PicardPresentation smooth = smooth_locus_picard(4, 1, 3);
        out.named_classes["D_{0,0}|U4"] = {0, 0, smooth.invariant_factors.at(0)};
        out.named_classes["D_{3,1}|U4"] = {0, 0,
                                           lines_in_surfaces_divisor_degree(4)};
        out.axioms = {rank_bound_axiom(3), kDiscriminantAxiom, kUniqueLineAxiom};
        return out;
    }
    case 6: {
        out.basis = {"D_{1,1}", "D_{2,1}", "D_{3,1}", "lambda_1"};
        out.invariant_factors = {0, 0, 0, 0};
        const DiscriminantClass sing = bidegree_discriminant_class(2, 3, 4);
        out.named_classes["D_{0,0}|U6"] = {0, 0, sing.coeff_base,
                                           sing.coeff_fiber};
        out.axioms = {rank_bound_axiom(4), kDiscriminantAxiom,
                      kSingularQuadricAxiom};
        return out;
    }
    case 8: {
        out.basis = {"D_{1,1}", "D_{2,1}", "D_{3,1}", "lambda_1"};
        out.invariant_factors = {0, 0, 0, 0};
        const PicardPresentation smooth = smooth_locus_picard(2, 3, 5);
        out.named_classes["D_{0,0}|U8\\D_{3,1}"] = {
            0, 0, 0, smooth.invariant_factors.at(0)};
        out.axioms = {rank_bound_axiom(4), kDiscriminantAxiom};
        return out;
    }
    default:
        throw precondition_error("supported degrees are 4, 6 and 8");
    }
}

} // namespace chowkit
