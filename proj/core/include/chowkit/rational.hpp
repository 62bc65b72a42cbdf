#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "chowkit/errors.hpp"

namespace chowkit {

// All arithmetic in this library is exact. There is no floating point
// anywhere; coefficients are arbitrary-precision rationals kept in lowest
// terms with a positive denominator (cpp_rational maintains both).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator_of(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline Int denominator_of(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

inline bool is_integral(const Rational& q) {
    return denominator_of(q) == 1;
}

inline Int to_int(const Rational& q) {
    if (!is_integral(q))
        throw precondition_error("expected an integer, got " +
                                 numerator_of(q).str() + "/" +
                                 denominator_of(q).str());
    return numerator_of(q);
}

/// "n/d" with the denominator always spelled out ("8/1").
inline std::string rational_string(const Rational& q) {
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// "n" when integral, "n/d" otherwise.
inline std::string coefficient_string(const Rational& q) {
    if (is_integral(q)) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

Int factorial(unsigned n);
Int binomial(const Int& n, unsigned k);

} // namespace chowkit
