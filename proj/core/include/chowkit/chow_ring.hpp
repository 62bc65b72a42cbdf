#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chowkit/monomial.hpp"
#include "chowkit/rational.hpp"

namespace chowkit {

class ChowRingPresentation;
using Ring = std::shared_ptr<const ChowRingPresentation>;

struct GeneratorInfo {
    std::string name;
    int degree = 1;
};

/// A rewrite rule "leading monomial -> lower-order tail". Rules must be
/// homogeneous and every tail monomial must be strictly smaller than the
/// leading monomial in the ring's termination order (lexicographic with
/// earlier-declared generators more significant), so repeated rewriting
/// terminates.
struct RewriteRule {
    Monomial lhs;
    std::vector<std::pair<Monomial, Rational>> tail;
};

struct PointInfo {
    Monomial monomial;   // top-degree normal-form monomial
    Rational integral;   // its integral, nonzero
};

/// Marks a ring built by product(); generator ids of each factor are
/// recorded positionally so classes can be moved between the product and
/// its factors.
struct ProductFactor {
    Ring ring;
    std::vector<int> generator_ids; // factor gen i -> product gen id
};

/// A finitely presented graded ring: generators with degrees, homogeneous
/// rewrite relations, a dimension above which everything is truncated to
/// zero, and (optionally) a distinguished point monomial with its integral.
///
/// Presentations are immutable once built and are shared through Ring
/// handles; all class arithmetic is pure, so rings and classes may be used
/// from any number of threads concurrently.
class ChowRingPresentation
    : public std::enable_shared_from_this<ChowRingPresentation> {
public:
    static Ring create(std::string name, std::vector<GeneratorInfo> generators,
                       std::vector<RewriteRule> rules, int dimension,
                       std::optional<PointInfo> point);

    const std::string& name() const { return name_; }
    const std::vector<GeneratorInfo>& generators() const { return generators_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    int dimension() const { return dimension_; }
    const std::optional<PointInfo>& point() const { return point_; }

    int generator_count() const { return static_cast<int>(generators_.size()); }
    std::optional<int> generator_id(const std::string& name) const;
    const GeneratorInfo& generator(int id) const { return generators_.at(id); }

    int degree_of(const Monomial& m) const;

    /// First rule whose leading monomial divides m, or nullptr.
    const RewriteRule* reducer(const Monomial& m) const;

    std::string monomial_string(const Monomial& m) const;

    /// Generators, degrees, relations and dimension in canonical JSON form.
    nlohmann::json to_json() const;

    // Structure tags used by projections and bundle constructors.
    const std::optional<int>& projective_space_fiber() const {
        return proj_space_dim_;
    }
    const std::vector<ProductFactor>& product_factors() const {
        return factors_;
    }

    /// Two presentations are structurally equal when generators (names and
    /// degrees), relations, dimension and point data all coincide.
    bool same_presentation(const ChowRingPresentation& other) const;

private:
    ChowRingPresentation() = default;
    friend Ring make_ring_with_structure(std::string, std::vector<GeneratorInfo>,
                                         std::vector<RewriteRule>, int,
                                         std::optional<PointInfo>,
                                         std::optional<int>,
                                         std::vector<ProductFactor>);

    std::string name_;
    std::vector<GeneratorInfo> generators_;
    std::vector<RewriteRule> rules_;
    int dimension_ = 0;
    std::optional<PointInfo> point_;
    std::optional<int> proj_space_dim_;
    std::vector<ProductFactor> factors_;
};

/// Ring-dimension cap, read once from CHOWKIT_MAX_DIM (default 64). Bounds
/// the Bernoulli/Todd coefficient precomputation.
int max_ring_dimension();

/// Constructor used by the variety builders; validates the presentation and
/// attaches structure tags. Not meant for direct use.
Ring make_ring_with_structure(std::string name,
                              std::vector<GeneratorInfo> generators,
                              std::vector<RewriteRule> rules, int dimension,
                              std::optional<PointInfo> point,
                              std::optional<int> proj_space_dim,
                              std::vector<ProductFactor> factors);

} // namespace chowkit
