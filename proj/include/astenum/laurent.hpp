#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "astenum/arith.hpp"

namespace astenum {

/// Cheap shareable handle to an ordered set of variable names. Two rings are
/// equal iff their name lists are equal.
class Ring {
public:
    explicit Ring(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

    // The canonical ring of the four statistics.
    static const Ring& qrst() {
        static const Ring r(std::vector<std::string>{"Q", "R", "S", "T"});
        return r;
    }

    // Univariate ring in Q, used for monotone-triangle generating functions.
    static const Ring& q_only() {
        static const Ring r(std::vector<std::string>{"Q"});
        return r;
    }

    // Auxiliary ring Y1..Yn, Q for the constant-term evaluation; Q is last.
    static Ring with_aux_vars(int n) {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
        names.push_back("Q");
        return Ring(std::move(names));
    }

    std::size_t arity() const { return names_->size(); }
    const std::vector<std::string>& names() const { return *names_; }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }

    int index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const Ring& other) const {
        return names_ == other.names_ || *names_ == *other.names_;
    }
    bool operator!=(const Ring& other) const { return !(*this == other); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<int>;

/// Exponent rewrite applied termwise: the exponent e of source variable i
/// becomes scale[i]*e + offset[i] on target variable perm[i]. With scales in
/// {+1,-1} this is a bijection on monomials; composing a map with its inverse
/// is the identity.
struct MonomialMap {
    std::vector<std::size_t> perm;
    std::vector<int> scale;   // each +1 or -1
    std::vector<int> offset;

    static MonomialMap identity(std::size_t arity) {
        MonomialMap m;
        m.perm.resize(arity);
        for (std::size_t i = 0; i < arity; ++i) m.perm[i] = i;
        m.scale.assign(arity, 1);
        m.offset.assign(arity, 0);
        return m;
    }

    MonomialMap inverse() const {
        MonomialMap inv = identity(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            // target exponent f = scale*e + offset  =>  e = scale*f - scale*offset
            inv.perm[perm[i]] = i;
            inv.scale[perm[i]] = scale[i];
            inv.offset[perm[i]] = -scale[i] * offset[i];
        }
        return inv;
    }
};

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. Stored in canonical form: no zero coefficients, terms keyed
/// and ordered lexicographically by exponent vector.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponents, BigInt>;

    explicit LaurentPolynomial(Ring ring) : ring_(std::move(ring)) {}

    static LaurentPolynomial zero(const Ring& ring) { return LaurentPolynomial(ring); }

    static LaurentPolynomial constant(const Ring& ring, BigInt value) {
        LaurentPolynomial p(ring);
        if (value != 0) p.terms_.emplace(Exponents(ring.arity(), 0), std::move(value));
        return p;
    }

    static LaurentPolynomial monomial(const Ring& ring, Exponents exps, BigInt coef) {
        if (exps.size() != ring.arity())
            throw std::invalid_argument("exponent vector length does not match ring arity");
        LaurentPolynomial p(ring);
        if (coef != 0) p.terms_.emplace(std::move(exps), std::move(coef));
        return p;
    }

    static LaurentPolynomial variable(const Ring& ring, std::string_view name, int power = 1) {
        int idx = ring.index_of(name);
        if (idx < 0) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
        Exponents e(ring.arity(), 0);
        e[static_cast<std::size_t>(idx)] = power;
        return monomial(ring, std::move(e), 1);
    }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    BigInt coefficient(const Exponents& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    bool operator==(const LaurentPolynomial& other) const {
        return ring_ == other.ring_ && terms_ == other.terms_;
    }
    bool operator!=(const LaurentPolynomial& other) const { return !(*this == other); }

    LaurentPolynomial& operator+=(const LaurentPolynomial& other) {
        require_same_ring(other);
        for (const auto& [exps, coef] : other.terms_) add_term(exps, coef);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& other) {
        require_same_ring(other);
        for (const auto& [exps, coef] : other.terms_) add_term(exps, -coef);
        return *this;
    }

    LaurentPolynomial operator+(const LaurentPolynomial& other) const {
        LaurentPolynomial result = *this;
        result += other;
        return result;
    }

    LaurentPolynomial operator-(const LaurentPolynomial& other) const {
        LaurentPolynomial result = *this;
        result -= other;
        return result;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial result(ring_);
        for (const auto& [exps, coef] : terms_) result.terms_.emplace(exps, -coef);
        return result;
    }

    LaurentPolynomial operator*(const LaurentPolynomial& other) const {
        require_same_ring(other);
        LaurentPolynomial result(ring_);
        Exponents sum(ring_.arity());
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : other.terms_) {
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
                result.add_term(sum, ca * cb);
            }
        }
        return result;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& other) {
        *this = *this * other;
        return *this;
    }

    LaurentPolynomial operator*(const BigInt& scalar) const {
        LaurentPolynomial result(ring_);
        if (scalar == 0) return result;
        for (const auto& [exps, coef] : terms_) result.terms_.emplace(exps, coef * scalar);
        return result;
    }

    LaurentPolynomial& operator*=(const BigInt& scalar) {
        *this = *this * scalar;
        return *this;
    }

    /// Rewrites every term per the map; coefficients are unchanged.
    LaurentPolynomial apply(const MonomialMap& map) const {
        if (map.perm.size() != ring_.arity())
            throw std::invalid_argument("monomial map arity mismatch");
        for (int s : map.scale)
            if (s != 1 && s != -1)
                throw std::invalid_argument("monomial map scale must be +1 or -1");
        LaurentPolynomial result(ring_);
        Exponents mapped(ring_.arity());
        for (const auto& [exps, coef] : terms_) {
            for (std::size_t i = 0; i < exps.size(); ++i)
                mapped[map.perm[i]] = map.scale[i] * exps[i] + map.offset[i];
            result.add_term(mapped, coef);
        }
        return result;
    }

    /// Exact value at a rational point. A variable occurring with a negative
    /// exponent must not be assigned zero.
    BigRational evaluate(const std::vector<BigRational>& point) const {
        if (point.size() != ring_.arity())
            throw std::invalid_argument("evaluation point arity mismatch");
        BigRational total = 0;
        for (const auto& [exps, coef] : terms_) {
            BigRational term(coef);
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (point[i] == 0 && exps[i] < 0)
                    throw std::domain_error("variable " + ring_.name(i) +
                                            " occurs with negative exponent but is assigned 0");
                term *= rational_pow(point[i], exps[i]);
            }
            total += term;
        }
        return total;
    }

    bool has_negative_exponent() const {
        for (const auto& [exps, coef] : terms_)
            for (int e : exps)
                if (e < 0) return true;
        return false;
    }

    int min_exponent(std::size_t var) const {
        int m = 0;
        bool first = true;
        for (const auto& [exps, coef] : terms_) {
            if (first || exps[var] < m) m = exps[var];
            first = false;
        }
        return m;
    }

    int max_exponent(std::size_t var) const {
        int m = 0;
        bool first = true;
        for (const auto& [exps, coef] : terms_) {
            if (first || exps[var] > m) m = exps[var];
            first = false;
        }
        return m;
    }

    /// Signed sum of monomials in canonical order, e.g. "1 + -1*Q^1*R^2".
    /// Zero exponents are omitted; the constant term prints as a bare integer.
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [exps, coef] : terms_) {
            if (!first) out << " + ";
            first = false;
            bool has_vars = std::any_of(exps.begin(), exps.end(), [](int e) { return e != 0; });
            if (!has_vars) {
                out << coef.str();
                continue;
            }
            out << coef.str();
            for (std::size_t i = 0; i < exps.size(); ++i)
                if (exps[i] != 0) out << "*" << ring_.name(i) << "^" << exps[i];
        }
        return out.str();
    }

    /// Parses the to_text form; terms may appear in any order and repeated
    /// monomials are accumulated.
    static LaurentPolynomial parse_text(const Ring& ring, std::string_view text);

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["vars"] = ring_.names();
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [exps, coef] : terms_)
            terms.push_back({{"exp", exps}, {"coef", coef.str()}});
        j["terms"] = std::move(terms);
        return j;
    }

    static LaurentPolynomial from_json(const nlohmann::json& j) {
        Ring ring(j.at("vars").get<std::vector<std::string>>());
        LaurentPolynomial p(ring);
        for (const auto& term : j.at("terms")) {
            Exponents exps = term.at("exp").get<Exponents>();
            if (exps.size() != ring.arity())
                throw std::invalid_argument("term exponent arity mismatch");
            p.add_term(exps, BigInt(term.at("coef").get<std::string>()));
        }
        return p;
    }

    void add_term(const Exponents& exps, const BigInt& coef) {
        if (coef == 0) return;
        auto [it, inserted] = terms_.try_emplace(exps, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    void require_same_ring(const LaurentPolynomial& other) const {
        if (ring_ != other.ring_) throw std::invalid_argument("ring mismatch");
    }

    Ring ring_;
    TermMap terms_;
};

inline LaurentPolynomial operator*(const BigInt& scalar, const LaurentPolynomial& p) {
    return p * scalar;
}

inline LaurentPolynomial LaurentPolynomial::parse_text(const Ring& ring, std::string_view text) {
    LaurentPolynomial result(ring);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto parse_int = [&]() -> long long {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("expected integer at position " + std::to_string(start));
        return std::stoll(std::string(text.substr(start, pos - start)));
    };
    skip_ws();
    if (text.substr(pos) == "0") return result;
    while (pos < text.size()) {
        skip_ws();
        // coefficient (may span many digits; reparse as BigInt)
        std::size_t coef_start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits_start)
            throw std::invalid_argument("expected coefficient at position " + std::to_string(pos));
        BigInt coef(std::string(text.substr(coef_start, pos - coef_start)));
        Exponents exps(ring.arity(), 0);
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            std::size_t name_start = pos;
            while (pos < text.size() && text[pos] != '^') ++pos;
            if (pos >= text.size())
                throw std::invalid_argument("expected '^' after variable name");
            std::string name(text.substr(name_start, pos - name_start));
            int idx = ring.index_of(name);
            if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
            ++pos;
            exps[static_cast<std::size_t>(idx)] += static_cast<int>(parse_int());
        }
        result.add_term(exps, coef);
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '+')
            throw std::invalid_argument("expected '+' between terms at position " + std::to_string(pos));
        ++pos;
    }
    return result;
}

// Convenience builders over the canonical ring.
namespace qrst {

inline const Ring& ring() { return Ring::qrst(); }

inline LaurentPolynomial term(int q, int r, int s, int t, BigInt coef = 1) {
    return LaurentPolynomial::monomial(ring(), {q, r, s, t}, std::move(coef));
}

inline LaurentPolynomial one() { return LaurentPolynomial::constant(ring(), 1); }
inline LaurentPolynomial Q() { return term(1, 0, 0, 0); }
inline LaurentPolynomial R() { return term(0, 1, 0, 0); }
inline LaurentPolynomial S() { return term(0, 0, 1, 0); }
inline LaurentPolynomial T() { return term(0, 0, 0, 1); }

/// S + T - Q, the weight of the degenerate central column.
inline LaurentPolynomial central_factor() { return S() + T() - Q(); }

}  // namespace qrst

}  // namespace astenum
