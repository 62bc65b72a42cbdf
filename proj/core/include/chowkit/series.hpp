#pragma once

#include <vector>

#include "chowkit/rational.hpp"

namespace chowkit {

// Dense truncated power series over the rationals, used to derive the
// Bernoulli and Todd coefficient tables once per process. Index = exponent.

std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b,
                                 std::size_t order);

/// Multiplicative inverse of a series with a(0) != 0.
std::vector<Rational> series_inverse(const std::vector<Rational>& a,
                                     std::size_t order);

/// log of a series with a(0) == 1.
std::vector<Rational> series_log(const std::vector<Rational>& a,
                                 std::size_t order);

/// Bernoulli numbers B_0..B_n (B_1 = -1/2), from inverting (e^x - 1)/x.
/// Computed once per process up to max_ring_dimension() + 1.
const std::vector<Rational>& bernoulli_numbers();

/// Coefficients of x/(1 - e^{-x}) = sum_k (-1)^k B_k x^k / k!.
const std::vector<Rational>& todd_factor_coefficients();

/// Coefficients a_k of log(x/(1 - e^{-x})); the additive form of the Todd
/// class: Td(E) = exp(sum_k a_k k! ch_k(E)).
const std::vector<Rational>& todd_log_coefficients();

} // namespace chowkit
