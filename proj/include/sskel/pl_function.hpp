#pragma once

// Piecewise log-affine shadows |a|_Delta: pointwise maxima of power
// functions r -> c * r^n on the skeleton. The reduced form drops every
// term dominated by another one; by the monomial domination criterion this
// never changes the function. Single-term comparisons are decided exactly
// by the vertex criterion; comparisons with a multi-term left side are
// deliberately three-valued, with dense rational sampling used only to
// refute.

#include <sskel/skeleton.hpp>
#include <sskel/special_poly.hpp>

#include <map>
#include <optional>
#include <vector>

namespace sskel {

struct PLTerm {
    Value c;   // nonzero
    ExpVec n;  // Z^m x N^{l-m}
};

enum class PLCompare { holds, fails, unknown };

inline const char* to_string(PLCompare c) {
    switch (c) {
        case PLCompare::holds: return "holds";
        case PLCompare::fails: return "fails";
        case PLCompare::unknown: return "unknown";
    }
    return "?";
}

class PLFunction {
public:
    using TermMap = std::map<ExpVec, Value>;

    PLFunction(ModelAlgebra model, TermMap terms) : model_(std::move(model)) {
        model_.validate();
        if (terms.empty()) throw std::invalid_argument("pl function: empty term set");
        for (auto& [n, c] : terms) {
            check_exponent(model_, n);
            if (c.is_zero()) throw std::invalid_argument("pl function: zero scale");
            insert_reduced(n, c);
        }
    }

    static PLFunction from_poly(const SpecialPoly& a) {
        if (a.is_zero()) throw std::invalid_argument("pl function: zero polynomial");
        TermMap terms;
        for (const auto& [n, c] : a.terms()) terms.emplace(n, c.valuation());
        return PLFunction(a.model(), std::move(terms));
    }

    static PLFunction from_term(const ModelAlgebra& M, const PLTerm& t) {
        return PLFunction(M, TermMap{{t.n, t.c}});
    }

    const ModelAlgebra& model() const { return model_; }
    const TermMap& terms() const { return terms_; }
    bool is_single_term() const { return terms_.size() == 1; }

    PLTerm single_term() const {
        if (!is_single_term()) throw std::domain_error("pl function: not a single term");
        return {terms_.begin()->second, terms_.begin()->first};
    }

    Value eval(const SkeletonPoint& p) const {
        Skeleton sk(model_);
        sk.check_point(p);
        Value best = Value::zero();
        for (const auto& [n, c] : terms_) {
            Value term = term_value(c, n, p);
            if (cmp(term, best) == Order::greater) best = term;
        }
        return best;
    }

    friend PLFunction operator*(const PLFunction& a, const PLFunction& b) {
        if (!(a.model_ == b.model_)) throw std::invalid_argument("pl function: mixed models");
        // max_i f_i * max_j g_j = max_{i,j} f_i g_j pointwise (all terms
        // are nonnegative), so the product is the termwise product set.
        TermMap terms;
        for (const auto& [na, ca] : a.terms_)
            for (const auto& [nb, cb] : b.terms_) {
                ExpVec n = add_exponents(na, nb);
                Value c = ca * cb;
                auto it = terms.find(n);
                if (it == terms.end())
                    terms.emplace(std::move(n), std::move(c));
                else if (cmp(c, it->second) == Order::greater)
                    it->second = c;  // same exponent: keep the larger scale
            }
        return PLFunction(a.model_, std::move(terms));
    }

    friend bool operator==(const PLFunction& a, const PLFunction& b) {
        return a.model_ == b.model_ && a.terms_ == b.terms_;
    }

private:
    Value term_value(const Value& c, const ExpVec& n, const SkeletonPoint& p) const {
        Value term = c;
        for (unsigned i = 0; i < model_.l; ++i) {
            if (n[i] == 0) continue;
            const Value& ri = p.r[i];
            if (ri.is_zero()) {
                if (n[i] < 0)
                    throw std::invalid_argument("pl eval: zero coordinate raised to a negative exponent");
                return Value::zero();
            }
            term = term * pow(ri, Rational(n[i]));
        }
        return term;
    }

    void insert_reduced(const ExpVec& n, const Value& c) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (monomial_dominates(model_, it->second, it->first, c, n)) return;  // dominated: drop
            if (monomial_dominates(model_, c, n, it->second, it->first))
                it = terms_.erase(it);
            else
                ++it;
        }
        terms_.emplace(n, c);
    }

    ModelAlgebra model_;
    TermMap terms_;
};

namespace detail {

inline bool single_term_geq(const ModelAlgebra& M, const PLTerm& f, const PLTerm& g) {
    return monomial_dominates(M, f.c, f.n, g.c, g.n);
}

// f >= single-term g on Delta, three-valued. Sound positive route: some
// term of f dominates g. Refutation route: exact evaluation on the vertex
// and sample grids.
inline PLCompare pl_geq_single(const PLFunction& f, const PLTerm& g) {
    const ModelAlgebra& M = f.model();
    for (const auto& [n, c] : f.terms())
        if (single_term_geq(M, PLTerm{c, n}, g)) return PLCompare::holds;
    if (f.is_single_term()) return PLCompare::fails;  // vertex criterion is exact here

    PLFunction gfun = PLFunction::from_term(M, g);
    Skeleton sk(M);
    for (const auto& p : sk.vertices())
        if (cmp(f.eval(p), gfun.eval(p)) == Order::less) return PLCompare::fails;
    for (const auto& p : sk.sample_points())
        if (cmp(f.eval(p), gfun.eval(p)) == Order::less) return PLCompare::fails;
    return PLCompare::unknown;
}

}  // namespace detail

// f >= g everywhere on Delta. Termwise in g (exact: g is the max of its
// terms); never converts "unknown" into an answer.
inline PLCompare pl_geq(const PLFunction& f, const PLFunction& g) {
    if (!(f.model() == g.model())) throw std::invalid_argument("pl_geq: mixed models");
    bool saw_unknown = false;
    for (const auto& [n, c] : g.terms()) {
        switch (detail::pl_geq_single(f, PLTerm{c, n})) {
            case PLCompare::fails: return PLCompare::fails;
            case PLCompare::unknown: saw_unknown = true; break;
            case PLCompare::holds: break;
        }
    }
    return saw_unknown ? PLCompare::unknown : PLCompare::holds;
}

// The term equal to f everywhere on Delta, if one exists: the reduced form
// must be a singleton.
inline std::optional<PLTerm> is_power_on_delta(const PLFunction& f) {
    if (f.is_single_term()) return f.single_term();
    return std::nullopt;
}

// Checks the observation that a product of two such maxima is a power
// function on Delta exactly when both factors are. Returns whether the
// biconditional holds; any false is a bug certificate.
inline bool check_product_power_property(const PLFunction& f, const PLFunction& g) {
    bool product_power = is_power_on_delta(f * g).has_value();
    bool factors_power = is_power_on_delta(f).has_value() && is_power_on_delta(g).has_value();
    return product_power == factors_power;
}

}  // namespace sskel
