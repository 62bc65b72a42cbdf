#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chowkit/chow_ring.hpp"

namespace chowkit {

/// An exact-rational cycle class: a linear combination of monomials in the
/// owning ring's generators. Every stored monomial is in normal form with
/// respect to the ring's relations, carries a nonzero coefficient, and has
/// degree at most the ring dimension. Values are immutable in spirit: all
/// operations return fresh classes.
class ChowClass {
public:
    explicit ChowClass(Ring ring);
    ChowClass(Ring ring, const Rational& constant);

    static ChowClass monomial(Ring ring, const Monomial& m,
                              const Rational& coeff = 1);
    static ChowClass generator(Ring ring, const std::string& name);

    /// Reduce an arbitrary term list into normal form.
    static ChowClass from_terms(
        Ring ring, const std::vector<std::pair<Monomial, Rational>>& terms);

    const Ring& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;
    Rational degree_zero_part() const { return coefficient(Monomial::one()); }

    /// Homogeneous part of the given degree.
    ChowClass component(int degree) const;
    /// Largest degree with a nonzero term (-1 for the zero class).
    int top_degree() const;
    /// True when every term has the same degree (the zero class is
    /// homogeneous of any degree).
    bool is_homogeneous(int degree) const;

    ChowClass operator+(const ChowClass& other) const;
    ChowClass operator-(const ChowClass& other) const;
    ChowClass operator-() const;
    ChowClass operator*(const ChowClass& other) const;
    ChowClass operator*(const Rational& scalar) const;
    ChowClass operator/(const Rational& scalar) const;
    ChowClass pow(unsigned k) const;

    bool operator==(const ChowClass& other) const;

    /// Canonical rendering: terms sorted by total degree, then by exponent
    /// vector (generator declaration order) descending; coefficients as
    /// integers or "num/den".
    std::string canonical_string() const;

    /// Same, but with a common positive integer content pulled out in front
    /// when the class has several terms: "5*(143*s1^4 - ... )".
    std::string factored_string() const;

    /// {"terms":[{"coeff":"8/1","mono":{"t":2}}]} with terms sorted
    /// lexicographically by generator name then exponent.
    nlohmann::json to_json() const;

private:
    Ring ring_;
    std::map<Monomial, Rational> terms_;
};

inline ChowClass operator*(const Rational& scalar, const ChowClass& c) {
    return c * scalar;
}

/// Re-reduces a class. Classes are kept reduced by construction, so this is
/// idempotent; it exists as a seam for exercising the rewrite engine.
ChowClass normal_form(const ChowClass& a);

/// Truncated exponential sum_{k>=0} x^k / k!. Requires the degree-0
/// component of x to vanish.
ChowClass exp_series(const ChowClass& x);

/// Truncated series x/(1 - e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ... for a
/// homogeneous degree-1 class x; coefficients come from Bernoulli numbers.
ChowClass todd_factor(const ChowClass& x);

} // namespace chowkit
