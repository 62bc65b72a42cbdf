#pragma once

#include <nlohmann/json_fwd.hpp>

#include "chowkit/varieties.hpp"

namespace chowkit {

/// A virtual sheaf class stored as its Chern character. The degree-0
/// component is the virtual rank and must be an integer; Whitney sums are
/// plain additions of characters, tensor products are multiplications.
class KClass {
public:
    explicit KClass(ChowClass ch);

    const ChowClass& ch() const { return ch_; }
    const Ring& ring() const { return ch_.ring(); }
    /// ch component of the given degree.
    ChowClass component(int degree) const { return ch_.component(degree); }
    Int rank() const { return to_int(ch_.degree_zero_part()); }

    KClass operator+(const KClass& other) const { return KClass(ch_ + other.ch_); }
    KClass operator-(const KClass& other) const { return KClass(ch_ - other.ch_); }
    KClass operator-() const { return KClass(-ch_); }
    KClass operator*(const KClass& other) const { return KClass(ch_ * other.ch_); }

    bool operator==(const KClass& other) const { return ch_ == other.ch_; }

    nlohmann::json to_json() const;

private:
    ChowClass ch_;
};

/// Line bundle with first Chern class d (homogeneous of degree 1):
/// ch = e^d, rank 1.
KClass line_bundle(const ChowClass& d);

/// Chern character from Chern classes via Newton's identities:
/// ch = rank + sum_k p_k / k! with p_k the power sums of the Chern roots.
KClass chern_character_from_classes(const BundleData& b);

/// Chern classes from the character, inverting Newton's identities degree
/// by degree: c_1 = ch_1, c_2 = c_1^2/2 - ch_2, c_3 = 2 ch_3 - c_1^3/3 +
/// c_1 c_2, c_4 = c_1^4/4 - c_1^2 c_2 + c_2^2/2 + c_1 c_3 - 6 ch_4, ...
/// Classes are produced up to the ring dimension.
BundleData chern_classes_from_character(const KClass& k);

/// Dual class: ch components negated in odd degrees.
KClass dual(const KClass& k);

/// Tensor by a line bundle with first Chern class d: shifts every Chern
/// root by d, i.e. ch -> ch * e^d.
KClass twist(const KClass& k, const ChowClass& d);

/// Multiplicative Todd class. Computed in additive form,
/// Td = exp(sum_k a_k k! ch_k) with a_k the coefficients of
/// log(x/(1-e^{-x})), which agrees with the universal polynomials
/// 1 + c1/2 + (c1^2+c2)/12 + c1 c2/24 + (-c1^4+4c1^2c2+3c2^2+c1c3-c4)/720 + ...
ChowClass todd_class(const KClass& k);

/// Inverse of the Todd class in the truncated ring (= Todd of the negated
/// K-class).
ChowClass todd_inverse(const KClass& k);

} // namespace chowkit
