#include "chowkit/chow_ring.hpp"

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "chowkit/chow_class.hpp"
#include "chowkit/errors.hpp"

namespace chowkit {

int max_ring_dimension() {
    static const int cap = [] {
        if (const char* env = std::getenv("CHOWKIT_MAX_DIM")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 64;
    }();
    return cap;
}

namespace {

// Termination order for rewrite rules: lexicographic on the dense exponent
// vector with earlier-declared generators more significant.
bool lex_less(const Monomial& a, const Monomial& b, int gen_count) {
    for (int id = 0; id < gen_count; ++id) {
        int ea = a.exponent(id), eb = b.exponent(id);
        if (ea != eb) return ea < eb;
    }
    return false;
}

} // namespace

Ring make_ring_with_structure(std::string name,
                              std::vector<GeneratorInfo> generators,
                              std::vector<RewriteRule> rules, int dimension,
                              std::optional<PointInfo> point,
                              std::optional<int> proj_space_dim,
                              std::vector<ProductFactor> factors) {
    if (dimension < 0)
        throw precondition_error("ring dimension must be non-negative");
    if (dimension > max_ring_dimension())
        throw precondition_error(
            "ring dimension " + std::to_string(dimension) +
            " exceeds the CHOWKIT_MAX_DIM cap of " +
            std::to_string(max_ring_dimension()));
    for (const auto& g : generators) {
        if (g.name.empty())
            throw precondition_error("generator names must be non-empty");
        if (g.degree < 1)
            throw precondition_error("generator degrees must be positive");
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i].name == generators[j].name)
                throw precondition_error("duplicate generator name '" +
                                         generators[i].name + "'");

    auto ring = std::shared_ptr<ChowRingPresentation>(
        new ChowRingPresentation());
    ring->name_ = std::move(name);
    ring->generators_ = std::move(generators);
    ring->rules_ = std::move(rules);
    ring->dimension_ = dimension;
    ring->point_ = std::move(point);
    ring->proj_space_dim_ = proj_space_dim;
    ring->factors_ = std::move(factors);

    const int gen_count = ring->generator_count();
    for (const auto& rule : ring->rules_) {
        if (rule.lhs.is_one())
            throw precondition_error("rewrite rule with trivial lead");
        const int lead_degree = ring->degree_of(rule.lhs);
        for (const auto& [m, c] : rule.tail) {
            if (c == 0)
                throw precondition_error("rewrite rule tail with zero coefficient");
            if (ring->degree_of(m) != lead_degree)
                throw precondition_error("rewrite rules must be homogeneous");
            if (!lex_less(m, rule.lhs, gen_count))
                throw precondition_error(
                    "rewrite rule tail must be smaller than its lead");
        }
    }
    if (ring->point_) {
        if (ring->degree_of(ring->point_->monomial) != dimension)
            throw precondition_error("point monomial degree must equal the dimension");
        if (ring->point_->integral == 0)
            throw precondition_error("point integral must be nonzero");
        if (ring->reducer(ring->point_->monomial) != nullptr)
            throw precondition_error("point monomial must be in normal form");
    }
    return ring;
}

Ring ChowRingPresentation::create(std::string name,
                                  std::vector<GeneratorInfo> generators,
                                  std::vector<RewriteRule> rules, int dimension,
                                  std::optional<PointInfo> point) {
    return make_ring_with_structure(std::move(name), std::move(generators),
                                    std::move(rules), dimension,
                                    std::move(point), std::nullopt, {});
}

std::optional<int> ChowRingPresentation::generator_id(
    const std::string& name) const {
    for (int i = 0; i < generator_count(); ++i)
        if (generators_[i].name == name) return i;
    return std::nullopt;
}

int ChowRingPresentation::degree_of(const Monomial& m) const {
    int deg = 0;
    for (const auto& [id, exp] : m.entries()) {
        if (id < 0 || id >= generator_count())
            throw precondition_error("monomial uses a foreign generator id");
        deg += generators_[id].degree * exp;
    }
    return deg;
}

const RewriteRule* ChowRingPresentation::reducer(const Monomial& m) const {
    for (const auto& rule : rules_)
        if (rule.lhs.divides(m)) return &rule;
    return nullptr;
}

std::string ChowRingPresentation::monomial_string(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [id, exp] : m.entries()) {
        if (!out.empty()) out += "*";
        out += generators_.at(id).name;
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

bool ChowRingPresentation::same_presentation(
    const ChowRingPresentation& other) const {
    if (dimension_ != other.dimension_) return false;
    if (generators_.size() != other.generators_.size()) return false;
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name != other.generators_[i].name ||
            generators_[i].degree != other.generators_[i].degree)
            return false;
    auto rule_terms = [](const ChowRingPresentation& r) {
        std::vector<std::pair<Monomial, std::vector<std::pair<Monomial, Rational>>>>
            out;
        for (const auto& rule : r.rules_) {
            auto tail = rule.tail;
            std::sort(tail.begin(), tail.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            out.emplace_back(rule.lhs, std::move(tail));
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    };
    if (rule_terms(*this) != rule_terms(other)) return false;
    if (point_.has_value() != other.point_.has_value()) return false;
    if (point_ && (point_->monomial != other.point_->monomial ||
                   point_->integral != other.point_->integral))
        return false;
    return true;
}

nlohmann::json ChowRingPresentation::to_json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators_)
        gens.push_back({{"name", g.name}, {"degree", g.degree}});

    nlohmann::json rels = nlohmann::json::array();
    for (const auto& rule : rules_) {
        ChowClass tail = ChowClass::from_terms(shared_from_this(), rule.tail);
        nlohmann::json rel;
        rel["lead"] = monomial_string(rule.lhs);
        rel["tail"] = tail.canonical_string();
        rels.push_back(rel);
    }

    nlohmann::json out;
    out["name"] = name_;
    out["generators"] = gens;
    out["relations"] = rels;
    out["dimension"] = dimension_;
    if (point_) {
        out["point"] = {{"monomial", monomial_string(point_->monomial)},
                        {"integral", coefficient_string(point_->integral)}};
    }
    return out;
}

} // namespace chowkit
