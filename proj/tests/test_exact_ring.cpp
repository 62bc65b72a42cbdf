#include <doctest.h>

#include <array>
#include <thread>

#include "chowkit/series.hpp"
#include "test_helpers.hpp"

using namespace chowkit;
using namespace chowkit::testing;

namespace {

ChowClass gen(const Ring& r, const char* name) {
    return ChowClass::generator(r, name);
}

} // namespace

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    const Rational q = Rational(6) / Rational(-8);
    CHECK(numerator_of(q) == -3);
    CHECK(denominator_of(q) == 4);
    CHECK(rational_string(q) == "-3/4");
    CHECK(numerator_of(Rational(10, 4)) == 5);
    CHECK(denominator_of(Rational(10, 4)) == 2);
    CHECK(coefficient_string(Rational(8)) == "8");
    CHECK(coefficient_string(Rational(5, 3)) == "5/3");
    CHECK(is_integral(Rational(14, 7)));
    CHECK(to_int(Rational(14, 7)) == 2);
    CHECK_THROWS_AS(to_int(Rational(1, 2)), precondition_error);
}

TEST_CASE("monomial arithmetic") {
    const Monomial a = Monomial::generator(0, 2) * Monomial::generator(1);
    const Monomial b = Monomial::generator(0);
    CHECK(b.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK(b.quotient_of(a) == Monomial::generator(0) * Monomial::generator(1));
    CHECK(Monomial::from_entries({{1, 1}, {0, 2}}) == a);
    CHECK(Monomial::from_entries({{0, 0}}) == Monomial::one());
}

TEST_CASE("additive structure") {
    const Ring p3 = projective_space(3);
    const ChowClass t = gen(p3, "t");
    CHECK(t + ChowClass(p3) == t);                       // t + 0 = t
    CHECK((t + t * Rational(-1)).is_zero());             // t - t = 0
    const Ring gr = grassmannian_lines_in_p3();
    const ChowClass s1 = gen(gr, "s1");
    CHECK(s1 * Rational(10) + s1 * Rational(10) == s1 * Rational(20));
    CHECK_THROWS_AS(t + ChowClass(gr), precondition_error); // ring mismatch
}

TEST_CASE("multiplication truncates and reduces") {
    const Ring p3 = projective_space(3);
    const ChowClass t = gen(p3, "t");
    CHECK((t * t.pow(3)).is_zero()); // t^4 = 0
    CHECK(normal_form(ChowClass::monomial(p3, Monomial::generator(0, 5)))
              .is_zero()); // t^5 = 0

    const Ring gr = grassmannian_lines_in_p3();
    const ChowClass s1 = gen(gr, "s1");
    const ChowClass s2 = gen(gr, "s2");
    // s1^2 * s1^2 = 2 * point
    CHECK(s1.pow(2) * s1.pow(2) == s2.pow(2) * Rational(2));
    // s1 * s1^2 reduces through the cubic relation to 2 s1 s2
    CHECK(s1 * s1.pow(2) == s1 * s2 * Rational(2));
    // degree-6 monomials vanish
    CHECK(s2.pow(3).is_zero());
}

TEST_CASE("grassmannian reduction matches the Schubert multiplication table") {
    // Independent oracle: the classical multiplication table of Gr(2,4) in
    // the Schubert cell basis {1; q1; q2, q11; q21; q22}, with s1 = q1 and
    // s2 = q2, q11 = q1^2 - q2, q21 = q1 q2, q22 = q2^2.
    struct Row {
        std::array<int, 6> c{};
    };
    auto table = [](int i, int j) -> Row {
        Row out{};
        if (i > j) std::swap(i, j);
        if (i == 1 && j == 1) {
            out.c[2] = 1, out.c[3] = 1; // q1^2 = q2 + q11
        } else if (i == 1 && (j == 2 || j == 3)) {
            out.c[4] = 1; // q1 q2 = q1 q11 = q21
        } else if (i == 1 && j == 4) {
            out.c[5] = 1; // q1 q21 = q22
        } else if ((i == 2 && j == 2) || (i == 3 && j == 3)) {
            out.c[5] = 1; // q2^2 = q11^2 = q22
        }                 // q2 q11 = 0, and everything past degree 4 is 0
        return out;
    };
    const Ring gr = grassmannian_lines_in_p3();
    const ChowClass one(gr, 1);
    const ChowClass s1 = gen(gr, "s1");
    const ChowClass s2 = gen(gr, "s2");
    const std::array<ChowClass, 6> basis{one,     s1,      s2,
                                         s1 * s1 - s2, s1 * s2, s2 * s2};
    for (int i = 1; i <= 4; ++i) {
        for (int j = i; j <= 4; ++j) {
            const Row expect = table(i, j);
            ChowClass rhs(gr);
            for (int k = 0; k < 6; ++k)
                if (expect.c[k] != 0) rhs = rhs + basis[k] * Rational(expect.c[k]);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(basis[i] * basis[j] == rhs);
        }
    }
}

TEST_CASE("normal form is idempotent and compatible with products") {
    auto rng = seeded_rng(1);
    for (const Ring& ring :
         {projective_space(3), grassmannian_lines_in_p3(),
          product(projective_space(3), grassmannian_lines_in_p3())}) {
        for (int trial = 0; trial < 50; ++trial) {
            const ChowClass x = random_class(ring, rng);
            const ChowClass y = random_class(ring, rng);
            CHECK(normal_form(normal_form(x)) == normal_form(x));
            CHECK(normal_form(x * y) ==
                  normal_form(normal_form(x) * normal_form(y)));
        }
    }
}

TEST_CASE("multiplication is commutative and associative") {
    auto rng = seeded_rng(2);
    for (const Ring& ring :
         {projective_space(4), grassmannian_lines_in_p3(),
          product(projective_space(2), grassmannian_lines_in_p3())}) {
        for (int trial = 0; trial < 40; ++trial) {
            const ChowClass a = random_class(ring, rng);
            const ChowClass b = random_class(ring, rng);
            const ChowClass c = random_class(ring, rng);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("exp_series basics") {
    const Ring p3 = projective_space(3);
    const ChowClass t = gen(p3, "t");

    CHECK(exp_series(ChowClass(p3)) == ChowClass(p3, 1));

    // Taylor oracle: 1 + 4t + (4t)^2/2 + (4t)^3/6, coefficients built from
    // explicit factorial arithmetic.
    ChowClass expected(p3, 1);
    Rational fact = 1;
    for (int k = 1; k <= 3; ++k) {
        fact *= k;
        expected = expected + (t * Rational(4)).pow(k) / fact;
    }
    CHECK(exp_series(t * Rational(4)) == expected);
    CHECK(exp_series(t * Rational(4)).coefficient(Monomial::generator(0, 3)) ==
          Rational(32, 3));

    CHECK_THROWS_AS(exp_series(ChowClass(p3, 1)), precondition_error);
}

TEST_CASE("exp_series group law") {
    auto rng = seeded_rng(3);
    const Ring total =
        product(projective_space(3), grassmannian_lines_in_p3());
    for (int trial = 0; trial < 30; ++trial) {
        const ChowClass x = random_degree_one(total, rng);
        const ChowClass y = random_degree_one(total, rng);
        CHECK(exp_series(x) * exp_series(-x) == ChowClass(total, 1));
        CHECK(exp_series(x + y) == exp_series(x) * exp_series(y));

        // also for general nilpotents, not just degree-1 classes
        const ChowClass a = random_class(total, rng);
        const ChowClass b = random_class(total, rng);
        const ChowClass na = a - ChowClass(total, a.degree_zero_part());
        const ChowClass nb = b - ChowClass(total, b.degree_zero_part());
        CHECK(exp_series(na + nb) == exp_series(na) * exp_series(nb));
        CHECK(exp_series(na) * exp_series(-na) == ChowClass(total, 1));
    }
}

TEST_CASE("todd_factor series") {
    const Ring p3 = projective_space(3);
    const ChowClass t = gen(p3, "t");

    CHECK(todd_factor(ChowClass(p3)) == ChowClass(p3, 1));

    const ChowClass td = todd_factor(t);
    CHECK(td.coefficient(Monomial::one()) == 1);
    CHECK(td.coefficient(Monomial::generator(0, 1)) == Rational(1, 2));
    CHECK(td.coefficient(Monomial::generator(0, 2)) == Rational(1, 12));
    CHECK(td.coefficient(Monomial::generator(0, 3)) == 0);

    // Oracle: multiply by the explicit series of (1 - e^{-t})/t, whose
    // coefficient at t^k is (-1)^k/(k+1)!, and check the product is 1.
    ChowClass inverse_series(p3);
    for (int k = 0; k <= 3; ++k) {
        Rational fact = 1;
        for (int j = 2; j <= k + 1; ++j) fact *= j;
        const Rational coeff = (k % 2 == 0 ? Rational(1) : Rational(-1)) / fact;
        inverse_series = inverse_series +
                         ChowClass::monomial(p3, Monomial::generator(0, k),
                                             coeff);
    }
    CHECK(td * inverse_series == ChowClass(p3, 1));

    CHECK_THROWS_AS(todd_factor(t + t * t), precondition_error);
    CHECK_THROWS_AS(todd_factor(ChowClass(p3, 1)), precondition_error);
}

TEST_CASE("todd_factor(t)^4 computes Euler characteristics of O(d) on P^3") {
    // Binomial oracle: chi(P^3, O(d)) = C(d+3, 3).
    const Ring p3 = projective_space(3);
    const ChowClass t = gen(p3, "t");
    const ChowClass td_tangent = todd_factor(t).pow(4);
    for (int d = 0; d <= 4; ++d) {
        const ChowClass integrand = exp_series(t * Rational(d)) * td_tangent;
        CHECK(integrate(integrand) == Rational(binomial(d + 3, 3)));
    }
}

TEST_CASE("todd factor inverts 1 - exp(-x)") {
    auto rng = seeded_rng(4);
    const Ring total =
        product(projective_space(3), grassmannian_lines_in_p3());
    for (int trial = 0; trial < 20; ++trial) {
        const ChowClass x = random_degree_one(total, rng);
        const ChowClass one(total, 1);
        CHECK(todd_factor(x) * (one - exp_series(-x)) == x);
    }
}

TEST_CASE("series coefficients stay within the factorial denominator bound") {
    // Denominators of everything the engine produces divide products of at
    // most dim factorials bounded by the ring dimension; (dim!)^dim is a
    // hull for that.
    const Ring total =
        product(projective_space(3), grassmannian_lines_in_p3());
    const int dim = total->dimension();
    Int bound = 1;
    const Int fact = factorial(static_cast<unsigned>(dim));
    for (int i = 0; i < dim; ++i) bound *= fact;

    auto rng = seeded_rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const ChowClass x = random_degree_one(total, rng);
        const ChowClass value = exp_series(x) * todd_factor(x);
        for (const auto& [m, c] : value.terms()) {
            CHECK(bound % denominator_of(c) == 0);
        }
    }
}

TEST_CASE("bernoulli numbers match the classical table") {
    const auto& b = bernoulli_numbers();
    CHECK(b[0] == 1);
    CHECK(b[1] == Rational(-1, 2));
    CHECK(b[2] == Rational(1, 6));
    CHECK(b[3] == 0);
    CHECK(b[4] == Rational(-1, 30));
    CHECK(b[6] == Rational(1, 42));
    CHECK(b[8] == Rational(-1, 30));
    CHECK(b[10] == Rational(5, 66));
    CHECK(b[12] == Rational(-691, 2730));
}

TEST_CASE("rings and classes are safely shared across threads") {
    const Ring gr = grassmannian_lines_in_p3();
    const ChowClass s1 = ChowClass::generator(gr, "s1");
    const ChowClass s2 = ChowClass::generator(gr, "s2");
    std::array<Rational, 8> results;
    std::vector<std::thread> workers;
    for (int w = 0; w < 8; ++w) {
        workers.emplace_back([&, w] {
            Rational acc = 0;
            for (int i = 0; i < 200; ++i)
                acc += integrate((s1 * s1 + s2 * Rational(w)).pow(2));
            results[w] = acc;
        });
    }
    for (auto& t : workers) t.join();
    for (int w = 0; w < 8; ++w) {
        // (s1^2 + w s2)^2 integrates to 2 + 2w + w^2
        CHECK(results[w] == Rational(200 * (2 + 2 * w + w * w)));
    }
}

TEST_CASE("rings reject malformed presentations") {
    CHECK_THROWS_AS(ChowRingPresentation::create(
                        "bad", {{"x", 1}},
                        {{Monomial::generator(0, 2),
                          {{Monomial::generator(0, 1), Rational(1)}}}},
                        3, std::nullopt),
                    precondition_error); // inhomogeneous rule
    CHECK_THROWS_AS(ChowRingPresentation::create("bad", {{"x", 1}, {"x", 2}},
                                                 {}, 3, std::nullopt),
                    precondition_error); // duplicate name
    CHECK_THROWS_AS(
        ChowRingPresentation::create(
            "bad", {{"x", 1}}, {}, 2,
            PointInfo{Monomial::generator(0, 1), Rational(1)}),
        precondition_error); // point degree != dimension
}
