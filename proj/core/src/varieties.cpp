#include "chowkit/varieties.hpp"

#include <algorithm>
#include <set>

#include "chowkit/errors.hpp"

namespace chowkit {

Ring point_ring() {
    return make_ring_with_structure(
        "pt", {}, {}, 0, PointInfo{Monomial::one(), Rational(1)}, 0, {});
}

Ring projective_space(int n, const std::string& gen) {
    if (n < 1)
        throw precondition_error(
            "projective_space requires n >= 1 (use point_ring for a point)");
    RewriteRule truncation{Monomial::generator(0, n + 1), {}};
    return make_ring_with_structure(
        "P^" + std::to_string(n), {{gen, 1}}, {truncation}, n,
        PointInfo{Monomial::generator(0, n), Rational(1)}, n, {});
}

Ring grassmannian_lines_in_p3() {
    const Monomial s1 = Monomial::generator(0);
    const Monomial s2 = Monomial::generator(1);
    const Monomial s1s2 = s1 * s2;
    std::vector<RewriteRule> rules;
    // Reduced system generating the ideal (h3, h4) of the complete
    // homogeneous relations h3 = s1^3 - 2 s1 s2, h4 = s1^4 - 3 s1^2 s2 + s2^2.
    rules.push_back({Monomial::generator(0, 3), {{s1s2, Rational(2)}}});
    rules.push_back({Monomial::generator(0, 2) * s2,
                     {{Monomial::generator(1, 2), Rational(1)}}});
    rules.push_back({s1 * Monomial::generator(1, 2), {}});
    rules.push_back({Monomial::generator(1, 3), {}});
    return make_ring_with_structure(
        "Gr(2,4)", {{"s1", 1}, {"s2", 2}}, std::move(rules), 4,
        PointInfo{Monomial::generator(1, 2), Rational(1)}, std::nullopt, {});
}

Ring free_graded_ring(const std::string& name,
                      std::vector<GeneratorInfo> generators, int dimension) {
    return make_ring_with_structure(name, std::move(generators), {}, dimension,
                                    std::nullopt, std::nullopt, {});
}

namespace {

std::string fresh_name(const std::string& wanted,
                       const std::set<std::string>& used) {
    std::string candidate = wanted;
    while (used.count(candidate)) {
        if (candidate.size() == 1 && candidate[0] >= 'a' && candidate[0] < 'z')
            candidate[0] += 1;
        else
            candidate += "'";
    }
    return candidate;
}

Monomial remap(const Monomial& m, const std::vector<int>& id_map) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [id, exp] : m.entries())
        entries.emplace_back(id_map.at(id), exp);
    return Monomial::from_entries(std::move(entries));
}

RewriteRule remap_rule(const RewriteRule& rule, const std::vector<int>& id_map) {
    RewriteRule out;
    out.lhs = remap(rule.lhs, id_map);
    for (const auto& [m, c] : rule.tail)
        out.tail.emplace_back(remap(m, id_map), c);
    return out;
}

} // namespace

Ring product(Ring x, Ring y) {
    if (!x || !y) throw precondition_error("product of null rings");
    std::vector<GeneratorInfo> generators = x->generators();
    std::set<std::string> used;
    for (const auto& g : generators) used.insert(g.name);

    std::vector<int> x_map(x->generator_count());
    for (int i = 0; i < x->generator_count(); ++i) x_map[i] = i;
    std::vector<int> y_map(y->generator_count());
    for (int i = 0; i < y->generator_count(); ++i) {
        GeneratorInfo g = y->generator(i);
        g.name = fresh_name(g.name, used);
        used.insert(g.name);
        y_map[i] = static_cast<int>(generators.size());
        generators.push_back(std::move(g));
    }

    std::vector<RewriteRule> rules;
    for (const auto& r : x->rules()) rules.push_back(remap_rule(r, x_map));
    for (const auto& r : y->rules()) rules.push_back(remap_rule(r, y_map));

    std::optional<PointInfo> point;
    if (x->point() && y->point()) {
        point = PointInfo{remap(x->point()->monomial, x_map) *
                              remap(y->point()->monomial, y_map),
                          x->point()->integral * y->point()->integral};
    }

    const int dimension = x->dimension() + y->dimension();
    std::vector<ProductFactor> factors{{x, x_map}, {y, y_map}};
    return make_ring_with_structure(x->name() + " x " + y->name(),
                                    std::move(generators), std::move(rules),
                                    dimension, std::move(point), std::nullopt,
                                    std::move(factors));
}

BundleData BundleData::trivial(Ring ring, int rank) {
    BundleData out;
    out.ring = std::move(ring);
    out.rank = rank;
    return out;
}

void BundleData::validate() const {
    if (!ring) throw precondition_error("bundle data without a ring");
    for (std::size_t i = 0; i < chern.size(); ++i) {
        if (chern[i].ring() != ring)
            throw precondition_error("bundle classes live in a foreign ring");
        if (!chern[i].is_homogeneous(static_cast<int>(i) + 1))
            throw precondition_error("c_" + std::to_string(i + 1) +
                                     " must be homogeneous of degree " +
                                     std::to_string(i + 1));
    }
}

ChowClass BundleData::chern_class(int i) const {
    if (i == 0) return ChowClass(ring, 1);
    if (i >= 1 && i <= static_cast<int>(chern.size())) return chern[i - 1];
    return ChowClass(ring);
}

Ring projective_bundle(Ring base, const BundleData& e,
                       const std::string& gen_name) {
    if (!base) throw precondition_error("projective_bundle without a base");
    if (e.rank < 1)
        throw precondition_error("projective_bundle requires rank >= 1");
    if (e.ring != base)
        throw precondition_error(
            "bundle data must live over the base ring");
    e.validate();

    // The fiber generator is declared first so that it is the most
    // significant variable of the rewrite order; base ids shift by one.
    std::set<std::string> used{gen_name};
    std::vector<GeneratorInfo> generators{{gen_name, 1}};
    std::vector<int> base_map(base->generator_count());
    for (int i = 0; i < base->generator_count(); ++i) {
        GeneratorInfo g = base->generator(i);
        g.name = fresh_name(g.name, used);
        used.insert(g.name);
        base_map[i] = static_cast<int>(generators.size());
        generators.push_back(std::move(g));
    }

    std::vector<RewriteRule> rules;
    RewriteRule defining;
    defining.lhs = Monomial::generator(0, e.rank);
    for (int i = 1; i <= e.rank; ++i) {
        const ChowClass ci = e.chern_class(i);
        const Monomial h_power = Monomial::generator(0, e.rank - i);
        for (const auto& [m, c] : ci.terms())
            defining.tail.emplace_back(h_power * remap(m, base_map), -c);
    }
    rules.push_back(std::move(defining));
    for (const auto& r : base->rules()) rules.push_back(remap_rule(r, base_map));

    std::optional<PointInfo> point;
    if (base->point()) {
        point = PointInfo{Monomial::generator(0, e.rank - 1) *
                              remap(base->point()->monomial, base_map),
                          base->point()->integral};
    }

    const int dimension = base->dimension() + e.rank - 1;
    return make_ring_with_structure(
        "P(E" + std::to_string(e.rank) + " / " + base->name() + ")",
        std::move(generators), std::move(rules), dimension, std::move(point),
        std::nullopt, {});
}

Rational integrate(const ChowClass& a) {
    const Ring& ring = a.ring();
    if (!ring->point())
        throw precondition_error("ring '" + ring->name() +
                                 "' has no point monomial to integrate against");
    const int dim = ring->dimension();
    Rational out = 0;
    for (const auto& [m, c] : a.terms()) {
        if (ring->degree_of(m) != dim) continue; // lower components are ignored
        if (m == ring->point()->monomial) {
            out += c * ring->point()->integral;
        } else {
            throw integrity_error(
                "top-degree monomial " + ring->monomial_string(m) +
                " did not reduce to the point monomial; the presentation of '" +
                ring->name() + "' is incomplete");
        }
    }
    return out;
}

ChowClass pushforward_projection(const ChowClass& a, int onto) {
    const Ring& ring = a.ring();
    const auto& factors = ring->product_factors();
    if (factors.size() != 2)
        throw precondition_error(
            "pushforward_projection requires a two-factor product ring");
    if (onto != 0 && onto != 1)
        throw precondition_error("factor index must be 0 or 1");
    const ProductFactor& kept = factors[onto];
    const ProductFactor& dropped = factors[1 - onto];
    if (!dropped.ring->projective_space_fiber())
        throw precondition_error(
            "the discarded factor '" + dropped.ring->name() +
            "' is not a projective space with a known fiber dimension");
    const int fiber_dim = *dropped.ring->projective_space_fiber();
    const int fiber_gen =
        fiber_dim > 0 ? dropped.generator_ids.at(0) : -1;

    // Inverse of the kept factor's positional generator map.
    std::vector<int> inverse(ring->generator_count(), -1);
    for (int local = 0; local < static_cast<int>(kept.generator_ids.size());
         ++local)
        inverse[kept.generator_ids[local]] = local;

    std::vector<std::pair<Monomial, Rational>> out;
    for (const auto& [m, c] : a.terms()) {
        if (fiber_gen >= 0 && m.exponent(fiber_gen) != fiber_dim)
            continue; // lower fiber powers push forward to zero
        std::vector<Monomial::Entry> entries;
        for (const auto& [id, exp] : m.entries()) {
            if (id == fiber_gen) continue;
            if (inverse[id] < 0)
                throw precondition_error(
                    "class is not expressible in the product basis");
            entries.emplace_back(inverse[id], exp);
        }
        out.emplace_back(Monomial::from_entries(std::move(entries)), c);
    }
    return ChowClass::from_terms(kept.ring, out);
}

ChowClass transfer(const ChowClass& a, Ring target) {
    return transfer(a, std::move(target), {});
}

ChowClass transfer(const ChowClass& a, Ring target,
                   const std::map<std::string, std::string>& rename) {
    const Ring& source = a.ring();
    std::vector<int> id_map(source->generator_count(), -1);
    for (int id = 0; id < source->generator_count(); ++id) {
        const GeneratorInfo& g = source->generator(id);
        auto it = rename.find(g.name);
        const std::string& name = it == rename.end() ? g.name : it->second;
        auto tid = target->generator_id(name);
        if (!tid) {
            id_map[id] = -1; // only an error if actually used
            continue;
        }
        if (target->generator(*tid).degree != g.degree)
            throw precondition_error("generator '" + name +
                                     "' changes degree between rings");
        id_map[id] = *tid;
    }
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& [m, c] : a.terms()) {
        std::vector<Monomial::Entry> entries;
        for (const auto& [id, exp] : m.entries()) {
            if (id_map[id] < 0)
                throw precondition_error(
                    "target ring '" + target->name() + "' has no generator '" +
                    source->generator(id).name + "'");
            entries.emplace_back(id_map[id], exp);
        }
        terms.emplace_back(Monomial::from_entries(std::move(entries)), c);
    }
    return ChowClass::from_terms(std::move(target), terms);
}

} // namespace chowkit
