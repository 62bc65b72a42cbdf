#include "chowkit/char_classes.hpp"

#include <nlohmann/json.hpp>

#include "chowkit/errors.hpp"
#include "chowkit/series.hpp"

namespace chowkit {

KClass::KClass(ChowClass ch) : ch_(std::move(ch)) {
    if (!is_integral(ch_.degree_zero_part()))
        throw precondition_error(
            "virtual rank (degree-0 part of ch) must be an integer");
}

nlohmann::json KClass::to_json() const {
    nlohmann::json out;
    out["rank"] = rank().str();
    out["ch"] = ch_.to_json();
    return out;
}

KClass line_bundle(const ChowClass& d) {
    if (!d.is_homogeneous(1))
        throw precondition_error(
            "line_bundle requires a homogeneous degree-1 class");
    return KClass(exp_series(d));
}

namespace {

/// Power sums of the Chern roots from the elementary symmetric functions
/// (the Chern classes), by Newton's identities:
///   p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^k k c_k.
std::vector<ChowClass> power_sums_from_chern(const BundleData& b, int count) {
    std::vector<ChowClass> p;
    p.reserve(count);
    for (int k = 1; k <= count; ++k) {
        ChowClass acc(b.ring);
        for (int i = 1; i < k; ++i) {
            const ChowClass term = b.chern_class(i) * p[k - i - 1];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        const ChowClass last = b.chern_class(k) * Rational(k);
        acc = (k % 2 == 1) ? acc + last : acc - last;
        p.push_back(acc);
    }
    return p;
}

} // namespace

KClass chern_character_from_classes(const BundleData& b) {
    b.validate();
    const int dim = b.ring->dimension();
    ChowClass ch(b.ring, Rational(b.rank));
    auto p = power_sums_from_chern(b, dim);
    Rational kfact = 1;
    for (int k = 1; k <= dim; ++k) {
        kfact *= k;
        ch = ch + p[k - 1] / kfact;
    }
    return KClass(std::move(ch));
}

BundleData chern_classes_from_character(const KClass& k) {
    const Ring& ring = k.ring();
    const int dim = ring->dimension();
    const Int rank = k.rank(); // throws on a non-integer rank

    // p_k = k! ch_k, then invert Newton's identities degree by degree.
    std::vector<ChowClass> p;
    Rational kfact = 1;
    for (int d = 1; d <= dim; ++d) {
        kfact *= d;
        p.push_back(k.component(d) * kfact);
    }
    BundleData out;
    out.ring = ring;
    out.rank = static_cast<int>(rank);
    for (int d = 1; d <= dim; ++d) {
        ChowClass acc = p[d - 1];
        for (int i = 1; i < d; ++i) {
            const ChowClass term = out.chern[i - 1] * p[d - i - 1];
            acc = (i % 2 == 1) ? acc - term : acc + term;
        }
        acc = acc / Rational(d);
        out.chern.push_back(d % 2 == 1 ? acc : -acc);
    }
    return out;
}

KClass dual(const KClass& k) {
    const int dim = k.ring()->dimension();
    ChowClass ch(k.ring());
    for (int d = 0; d <= dim; ++d) {
        const ChowClass part = k.component(d);
        ch = (d % 2 == 0) ? ch + part : ch - part;
    }
    return KClass(std::move(ch));
}

KClass twist(const KClass& k, const ChowClass& d) {
    if (!d.is_homogeneous(1))
        throw precondition_error("twist requires a homogeneous degree-1 class");
    return KClass(k.ch() * exp_series(d));
}

namespace {

/// log Td as an additive genus: sum_k a_k k! ch_k with a_k the series
/// coefficients of log(x/(1-e^{-x})).
ChowClass todd_log(const KClass& k) {
    const auto& a = todd_log_coefficients();
    ChowClass acc(k.ring());
    Rational kfact = 1;
    for (int d = 1; d <= k.ring()->dimension(); ++d) {
        kfact *= d;
        if (a[d] == 0) continue;
        acc = acc + k.component(d) * (a[d] * kfact);
    }
    return acc;
}

} // namespace

ChowClass todd_class(const KClass& k) { return exp_series(todd_log(k)); }

ChowClass todd_inverse(const KClass& k) { return exp_series(-todd_log(k)); }

} // namespace chowkit
