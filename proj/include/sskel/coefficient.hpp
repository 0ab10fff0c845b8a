#pragma once

// Computational stand-in for elements of the valuation ring: a finite
// formal sum of rational multiples of values, c_1*g_1 + ... + c_k*g_k
// with distinct nonzero g_i, ordered by the value group. The valuation
// is the largest g_i. Leading terms of a product never cancel (the
// leading pair is unique by strict monotonicity of the group order), so
// the product of nonzero coefficients is nonzero and valuation is
// multiplicative.

#include <sskel/value.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace sskel {

class Coefficient {
public:
    using TermMap = std::map<Value, Rational, ValueLess>;

    Coefficient() = default;

    static Coefficient zero() { return Coefficient(); }
    static Coefficient one() { return term(Rational(1), Value::one()); }

    static Coefficient term(const Rational& c, const Value& gamma) {
        Coefficient r;
        if (c != 0 && !gamma.is_zero()) r.terms_[gamma] = c;
        return r;
    }

    static Coefficient of_value(const Value& gamma) { return term(Rational(1), gamma); }
    static Coefficient of_rational(const Rational& c) { return term(c, Value::one()); }

    static Coefficient from_terms(TermMap terms) {
        Coefficient r;
        for (auto& [gamma, c] : terms) {
            if (gamma.is_zero()) throw std::invalid_argument("coefficient: zero gamma");
            if (c != 0) r.terms_.emplace(gamma, std::move(c));
        }
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // max over the gammas; Zero for the empty sum.
    Value valuation() const { return terms_.empty() ? Value::zero() : terms_.rbegin()->first; }

    std::pair<Value, Rational> leading() const {
        if (terms_.empty()) throw std::domain_error("coefficient: leading term of zero");
        return {terms_.rbegin()->first, terms_.rbegin()->second};
    }
    std::pair<Value, Rational> trailing() const {
        if (terms_.empty()) throw std::domain_error("coefficient: trailing term of zero");
        return {terms_.begin()->first, terms_.begin()->second};
    }

    bool is_single_term() const { return terms_.size() == 1; }

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
        Coefficient r = a;
        for (const auto& [gamma, c] : b.terms_) r.add_term(gamma, c);
        return r;
    }

    friend Coefficient operator-(const Coefficient& a) {
        Coefficient r = a;
        for (auto& [gamma, c] : r.terms_) c = -c;
        return r;
    }

    friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

    friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
        Coefficient r;
        for (const auto& [ga, ca] : a.terms_)
            for (const auto& [gb, cb] : b.terms_) r.add_term(ga * gb, ca * cb);
        return r;
    }

    Coefficient scaled(const Value& gamma) const {
        if (gamma.is_zero()) return zero();
        Coefficient r;
        for (const auto& [g, c] : terms_) r.terms_.emplace(g * gamma, c);
        return r;
    }

    Coefficient scaled(const Rational& c) const {
        if (c == 0) return zero();
        Coefficient r = *this;
        for (auto& [g, cc] : r.terms_) cc *= c;
        return r;
    }

    friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += format_rational(it->second) + "*" + it->first.str();
        }
        return out;
    }

private:
    void add_term(const Value& gamma, const Rational& c) {
        auto it = terms_.find(gamma);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(gamma, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

// Exact division a / b in the coefficient model, by iterated cancellation
// of leading terms. The quotient, when it exists, has its terms produced
// in strictly decreasing gamma order, one per round, so the loop runs
// exactly quotient-size many rounds on success. A necessary condition for
// divisibility of the current remainder r is
//     trail(r)/trail(b) <= lead(r)/lead(b),
// and violating it certifies non-divisibility. Divisibility in the model
// is partial; single-term divisors always succeed.
inline std::optional<Coefficient> divide_exact(const Coefficient& a, const Coefficient& b,
                                               std::size_t max_rounds = 4096) {
    if (b.is_zero()) throw std::domain_error("coefficient: division by zero");
    if (a.is_zero()) return Coefficient::zero();

    if (b.is_single_term()) {
        auto [gb, cb] = b.leading();
        Coefficient::TermMap out;
        for (const auto& [g, c] : a.terms()) out.emplace(g / gb, c / cb);
        return Coefficient::from_terms(std::move(out));
    }

    const auto [lead_b, lead_bc] = b.leading();
    const auto [trail_b, trail_bc] = b.trailing();
    Coefficient q;
    Coefficient r = a;
    std::size_t rounds = 0;
    while (!r.is_zero()) {
        if (++rounds > max_rounds)
            throw std::runtime_error("coefficient: division budget exhausted (undecided quotient)");
        const auto [lead_r, lead_rc] = r.leading();
        const auto [trail_r, trail_rc] = r.trailing();
        if (cmp(trail_r * lead_b, lead_r * trail_b) == Order::greater) return std::nullopt;
        Coefficient t = Coefficient::term(lead_rc / lead_bc, lead_r / lead_b);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

}  // namespace sskel
