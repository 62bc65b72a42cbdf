#include "chowkit/series.hpp"

#include <mutex>

#include "chowkit/chow_ring.hpp"

namespace chowkit {

Int factorial(unsigned n) {
    Int out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

Int binomial(const Int& n, unsigned k) {
    Int out = 1;
    for (unsigned i = 0; i < k; ++i) {
        out *= (n - i);
        out /= (i + 1);
    }
    return out;
}

std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b,
                                 std::size_t order) {
    std::vector<Rational> out(order + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Rational> series_inverse(const std::vector<Rational>& a,
                                     std::size_t order) {
    if (a.empty() || a[0] == 0)
        throw precondition_error("series_inverse: constant term vanishes");
    std::vector<Rational> out(order + 1, Rational(0));
    out[0] = Rational(1) / a[0];
    for (std::size_t k = 1; k <= order; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j)
            acc += a[j] * out[k - j];
        out[k] = -acc / a[0];
    }
    return out;
}

std::vector<Rational> series_log(const std::vector<Rational>& a,
                                 std::size_t order) {
    if (a.empty() || a[0] != 1)
        throw precondition_error("series_log: constant term must be 1");
    // log(a) via log'(a) = a'/a, integrated term by term.
    std::vector<Rational> da(order + 1, Rational(0));
    for (std::size_t k = 1; k <= order && k < a.size(); ++k)
        da[k - 1] = a[k] * Rational(k);
    auto quotient = series_mul(da, series_inverse(a, order), order);
    std::vector<Rational> out(order + 1, Rational(0));
    for (std::size_t k = 1; k <= order; ++k)
        out[k] = quotient[k - 1] / Rational(k);
    return out;
}

namespace {

struct ToddTables {
    std::vector<Rational> bernoulli;
    std::vector<Rational> todd_factor;
    std::vector<Rational> todd_log;
};

const ToddTables& tables() {
    static ToddTables t = [] {
        const std::size_t order =
            static_cast<std::size_t>(max_ring_dimension()) + 1;
        ToddTables out;
        // (e^x - 1)/x = sum x^k / (k+1)!
        std::vector<Rational> e(order + 1);
        for (std::size_t k = 0; k <= order; ++k)
            e[k] = Rational(1, factorial(static_cast<unsigned>(k) + 1));
        auto inv = series_inverse(e, order); // x/(e^x - 1) = sum B_k x^k/k!
        out.bernoulli.resize(order + 1);
        out.todd_factor.resize(order + 1);
        for (std::size_t k = 0; k <= order; ++k) {
            out.bernoulli[k] = inv[k] * Rational(factorial(static_cast<unsigned>(k)));
            // x/(1 - e^{-x}) flips the sign of odd coefficients.
            out.todd_factor[k] = (k % 2 == 0) ? inv[k] : -inv[k];
        }
        out.todd_log = series_log(out.todd_factor, order);
        return out;
    }();
    return t;
}

} // namespace

const std::vector<Rational>& bernoulli_numbers() { return tables().bernoulli; }

const std::vector<Rational>& todd_factor_coefficients() {
    return tables().todd_factor;
}

const std::vector<Rational>& todd_log_coefficients() {
    return tables().todd_log;
}

} // namespace chowkit
