#include "chowkit/grr.hpp"

#include "chowkit/errors.hpp"

namespace chowkit {

KClass grr_project(const KClass& f, int fiber_dim) {
    const Ring& ring = f.ring();
    const auto& factors = ring->product_factors();
    if (factors.size() != 2)
        throw precondition_error(
            "grr_project: the class must live on a two-factor product ring");
    int fiber_index = -1;
    for (int i = 0; i < 2; ++i) {
        const auto& fiber = factors[i].ring->projective_space_fiber();
        if (fiber && *fiber == fiber_dim) {
            if (fiber_index >= 0)
                throw precondition_error(
                    "grr_project: ambiguous projective-space factor");
            fiber_index = i;
        }
    }
    if (fiber_index < 0)
        throw precondition_error(
            "grr_project: no projective-space factor of dimension " +
            std::to_string(fiber_dim));

    // Relative Todd class of the fiber: (t/(1-e^{-t}))^{n+1}.
    ChowClass td(ring, 1);
    if (fiber_dim > 0) {
        const int t_id = factors[fiber_index].generator_ids.at(0);
        const ChowClass t =
            ChowClass::monomial(ring, Monomial::generator(t_id));
        td = todd_factor(t).pow(static_cast<unsigned>(fiber_dim) + 1);
    }
    return KClass(pushforward_projection(f.ch() * td, 1 - fiber_index));
}

KClass embed_structure_sheaf(const ChowClass& fundamental_class,
                             const KClass& normal) {
    if (fundamental_class.ring() != normal.ring())
        throw precondition_error(
            "fundamental class and normal bundle live in different rings");
    const Int rank = normal.rank();
    if (rank < 0)
        throw precondition_error("normal bundle must have non-negative rank");
    if (!fundamental_class.is_homogeneous(static_cast<int>(rank)))
        throw precondition_error(
            "fundamental class must be homogeneous of degree rank(N) = " +
            rank.str());
    return KClass(todd_inverse(normal) * fundamental_class);
}

ChowClass subbundle_class(const BundleData& q, const std::string& hyperplane) {
    q.validate();
    if (q.rank < 0)
        throw precondition_error("quotient bundle rank must be >= 0");
    auto id = q.ring->generator_id(hyperplane);
    if (!id || q.ring->generator(*id).degree != 1)
        throw precondition_error("'" + hyperplane +
                                 "' is not a degree-1 generator of ring '" +
                                 q.ring->name() + "'");
    const ChowClass h = ChowClass::monomial(q.ring, Monomial::generator(*id));
    ChowClass out(q.ring);
    for (int i = 0; i <= q.rank; ++i)
        out = out + q.chern_class(i) * h.pow(static_cast<unsigned>(q.rank - i));
    return out;
}

} // namespace chowkit
