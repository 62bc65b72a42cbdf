#include "chowkit/chow_class.hpp"

#include <deque>

#include <nlohmann/json.hpp>

#include "chowkit/errors.hpp"
#include "chowkit/series.hpp"

namespace chowkit {

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
    if (a != b)
        throw precondition_error("operands belong to different rings ('" +
                                 a->name() + "' vs '" + b->name() + "')");
}

/// Worklist reduction: rewrite until every surviving monomial is in normal
/// form and within the dimension bound. Terminates because each rule
/// strictly decreases the ring's termination order.
std::map<Monomial, Rational> reduce_terms(
    const Ring& ring, std::deque<std::pair<Monomial, Rational>> work) {
    std::map<Monomial, Rational> out;
    while (!work.empty()) {
        auto [mono, coeff] = std::move(work.front());
        work.pop_front();
        if (coeff == 0) continue;
        if (ring->degree_of(mono) > ring->dimension()) continue;
        if (const RewriteRule* rule = ring->reducer(mono)) {
            const Monomial quotient = rule->lhs.quotient_of(mono);
            for (const auto& [tm, tc] : rule->tail)
                work.emplace_back(quotient * tm, coeff * tc);
            continue;
        }
        auto it = out.find(mono);
        if (it == out.end()) {
            out.emplace(std::move(mono), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

} // namespace

ChowClass::ChowClass(Ring ring) : ring_(std::move(ring)) {
    if (!ring_) throw precondition_error("class without a ring");
}

ChowClass::ChowClass(Ring ring, const Rational& constant)
    : ChowClass(std::move(ring)) {
    if (constant != 0) terms_.emplace(Monomial::one(), constant);
}

ChowClass ChowClass::monomial(Ring ring, const Monomial& m,
                              const Rational& coeff) {
    ChowClass out(std::move(ring));
    out.terms_ = reduce_terms(out.ring_, {{m, coeff}});
    return out;
}

ChowClass ChowClass::generator(Ring ring, const std::string& name) {
    auto id = ring->generator_id(name);
    if (!id)
        throw precondition_error("ring '" + ring->name() +
                                 "' has no generator named '" + name + "'");
    return monomial(std::move(ring), Monomial::generator(*id));
}

ChowClass ChowClass::from_terms(
    Ring ring, const std::vector<std::pair<Monomial, Rational>>& terms) {
    ChowClass out(std::move(ring));
    out.terms_ =
        reduce_terms(out.ring_, std::deque<std::pair<Monomial, Rational>>(
                                    terms.begin(), terms.end()));
    return out;
}

Rational ChowClass::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

ChowClass ChowClass::component(int degree) const {
    ChowClass out(ring_);
    for (const auto& [m, c] : terms_)
        if (ring_->degree_of(m) == degree) out.terms_.emplace(m, c);
    return out;
}

int ChowClass::top_degree() const {
    int top = -1;
    for (const auto& [m, c] : terms_) top = std::max(top, ring_->degree_of(m));
    return top;
}

bool ChowClass::is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
        if (ring_->degree_of(m) != degree) return false;
    return true;
}

ChowClass ChowClass::operator+(const ChowClass& other) const {
    require_same_ring(ring_, other.ring_);
    ChowClass out(ring_);
    out.terms_ = terms_;
    for (const auto& [m, c] : other.terms_) {
        auto it = out.terms_.find(m);
        if (it == out.terms_.end()) {
            out.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

ChowClass ChowClass::operator-() const {
    ChowClass out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ChowClass ChowClass::operator-(const ChowClass& other) const {
    return *this + (-other);
}

ChowClass ChowClass::operator*(const ChowClass& other) const {
    require_same_ring(ring_, other.ring_);
    std::deque<std::pair<Monomial, Rational>> raw;
    const int dim = ring_->dimension();
    for (const auto& [ma, ca] : terms_) {
        const int da = ring_->degree_of(ma);
        for (const auto& [mb, cb] : other.terms_) {
            if (da + ring_->degree_of(mb) > dim) continue;
            raw.emplace_back(ma * mb, ca * cb);
        }
    }
    ChowClass out(ring_);
    out.terms_ = reduce_terms(ring_, std::move(raw));
    return out;
}

ChowClass ChowClass::operator*(const Rational& scalar) const {
    ChowClass out(ring_);
    if (scalar == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
    return out;
}

ChowClass ChowClass::operator/(const Rational& scalar) const {
    if (scalar == 0) throw precondition_error("division by zero");
    return *this * (Rational(1) / scalar);
}

ChowClass ChowClass::pow(unsigned k) const {
    ChowClass out(ring_, 1);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
}

bool ChowClass::operator==(const ChowClass& other) const {
    return ring_ == other.ring_ && terms_ == other.terms_;
}

namespace {

/// Display order: total degree ascending, then exponent vectors in
/// generator declaration order, descending lexicographically.
std::vector<std::pair<Monomial, Rational>> display_sorted(
    const ChowClass& cls) {
    const Ring& ring = cls.ring();
    std::vector<std::pair<Monomial, Rational>> terms(cls.terms().begin(),
                                                     cls.terms().end());
    const int n = ring->generator_count();
    auto key_less = [&](const Monomial& a, const Monomial& b) {
        int da = ring->degree_of(a), db = ring->degree_of(b);
        if (da != db) return da < db;
        for (int id = 0; id < n; ++id) {
            int ea = a.exponent(id), eb = b.exponent(id);
            if (ea != eb) return ea > eb;
        }
        return false;
    };
    std::sort(terms.begin(), terms.end(),
              [&](const auto& x, const auto& y) {
                  return key_less(x.first, y.first);
              });
    return terms;
}

std::string render_terms(
    const Ring& ring,
    const std::vector<std::pair<Monomial, Rational>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (m.is_one()) {
            out += coefficient_string(mag);
        } else if (mag == 1) {
            out += ring->monomial_string(m);
        } else {
            out += coefficient_string(mag) + "*" + ring->monomial_string(m);
        }
    }
    return out;
}

} // namespace

std::string ChowClass::canonical_string() const {
    return render_terms(ring_, display_sorted(*this));
}

std::string ChowClass::factored_string() const {
    if (terms_.size() < 2) return canonical_string();
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator_of(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(c));
    }
    const Rational content(num_gcd, den_lcm);
    if (content == 1 || content == 0) return canonical_string();
    return coefficient_string(content) + "*(" +
           (*this / content).canonical_string() + ")";
}

nlohmann::json ChowClass::to_json() const {
    // Terms sorted lexicographically by generator name then exponent.
    std::vector<std::pair<std::vector<std::pair<std::string, int>>, Rational>>
        rows;
    for (const auto& [m, c] : terms_) {
        std::vector<std::pair<std::string, int>> named;
        for (const auto& [id, exp] : m.entries())
            named.emplace_back(ring_->generator(id).name, exp);
        std::sort(named.begin(), named.end());
        rows.emplace_back(std::move(named), c);
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [named, c] : rows) {
        nlohmann::json mono = nlohmann::json::object();
        for (const auto& [name, exp] : named) mono[name] = exp;
        terms.push_back({{"mono", mono}, {"coeff", rational_string(c)}});
    }
    return nlohmann::json{{"terms", terms}};
}

ChowClass normal_form(const ChowClass& a) {
    return ChowClass::from_terms(
        a.ring(), std::vector<std::pair<Monomial, Rational>>(a.terms().begin(),
                                                             a.terms().end()));
}

ChowClass exp_series(const ChowClass& x) {
    if (x.degree_zero_part() != 0)
        throw precondition_error(
            "exp_series requires a vanishing degree-0 component");
    ChowClass acc(x.ring(), 1);
    ChowClass power(x.ring(), 1);
    Rational kfact = 1;
    for (int k = 1; k <= x.ring()->dimension(); ++k) {
        power = power * x;
        if (power.is_zero()) break;
        kfact *= k;
        acc = acc + power / kfact;
    }
    return acc;
}

ChowClass todd_factor(const ChowClass& x) {
    if (!x.is_homogeneous(1))
        throw precondition_error(
            "todd_factor requires a homogeneous degree-1 class");
    const auto& coeffs = todd_factor_coefficients();
    ChowClass acc(x.ring(), 1);
    ChowClass power(x.ring(), 1);
    for (int k = 1; k <= x.ring()->dimension(); ++k) {
        power = power * x;
        if (power.is_zero()) break;
        if (coeffs[k] != 0) acc = acc + power * coeffs[k];
    }
    return acc;
}

} // namespace chowkit
