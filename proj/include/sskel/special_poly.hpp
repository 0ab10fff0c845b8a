#pragma once

// Special representations of elements of A = k°[t_0..t_l]/(t_0...t_m - pi):
// Laurent polynomials over Z^m x N^{l-m} obtained by eliminating
// t_0 = pi * t_1^{-1}...t_m^{-1}, with every coefficient obeying
// |a_n| <= |pi|^{-min(0, n_1..n_m)}. On top of the representation sit the
// monomial domination criterion, divisibility witnesses, the unit tests in
// R = A_q and R_eta, and generic-unit factorization.

#include <sskel/coefficient.hpp>
#include <sskel/model.hpp>
#include <sskel/skeleton.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sskel {

struct SpecialMonomial {
    ExpVec n;
    Coefficient coeff;
};

inline bool is_special(const ModelAlgebra& M, const ExpVec& n, const Coefficient& coeff) {
    check_exponent(M, n);
    return cmp(coeff.valuation(), specialness_bound(M, n)) != Order::greater;
}

inline void require_special(const ModelAlgebra& M, const ExpVec& n, const Coefficient& coeff) {
    if (coeff.is_zero()) throw std::invalid_argument("special monomial: zero coefficient");
    if (!is_special(M, n, coeff))
        throw std::invalid_argument("special monomial: coefficient valuation " + coeff.valuation().str() +
                                    " violates the specialness bound at " + format_exponent(n));
}

class SpecialPoly {
public:
    using TermMap = std::map<ExpVec, Coefficient>;

    explicit SpecialPoly(ModelAlgebra model) : model_(std::move(model)) { model_.validate(); }

    SpecialPoly(ModelAlgebra model, TermMap terms) : model_(std::move(model)) {
        model_.validate();
        for (auto& [n, c] : terms) {
            require_special(model_, n, c);
            terms_.emplace(n, std::move(c));
        }
    }

    static SpecialPoly zero(const ModelAlgebra& M) { return SpecialPoly(M); }

    static SpecialPoly constant(const ModelAlgebra& M, const Coefficient& c) {
        SpecialPoly p(M);
        if (!c.is_zero()) p.terms_.emplace(ExpVec(M.l, 0), c);
        return p;
    }

    static SpecialPoly one(const ModelAlgebra& M) { return constant(M, Coefficient::one()); }

    static SpecialPoly monomial(const ModelAlgebra& M, const ExpVec& n, const Coefficient& c) {
        SpecialPoly p(M);
        if (!c.is_zero()) {
            require_special(M, n, c);
            p.terms_.emplace(n, c);
        }
        return p;
    }

    const ModelAlgebra& model() const { return model_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Coefficient* constant_term() const {
        auto it = terms_.find(ExpVec(model_.l, 0));
        return it == terms_.end() ? nullptr : &it->second;
    }

    friend SpecialPoly operator+(const SpecialPoly& a, const SpecialPoly& b) {
        a.require_same_model(b);
        SpecialPoly r = a;
        for (const auto& [n, c] : b.terms_) r.add_term(n, c);
        return r;
    }

    friend SpecialPoly operator-(const SpecialPoly& a) {
        SpecialPoly r = a;
        for (auto& [n, c] : r.terms_) c = -c;
        return r;
    }

    friend SpecialPoly operator-(const SpecialPoly& a, const SpecialPoly& b) { return a + (-b); }

    friend SpecialPoly operator*(const SpecialPoly& a, const SpecialPoly& b) {
        a.require_same_model(b);
        SpecialPoly r(a.model_);
        for (const auto& [na, ca] : a.terms_)
            for (const auto& [nb, cb] : b.terms_) r.add_term(add_exponents(na, nb), ca * cb);
        return r;
    }

    friend bool operator==(const SpecialPoly& a, const SpecialPoly& b) {
        return a.model_ == b.model_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SpecialPoly& a, const SpecialPoly& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [n, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "[" + c.str() + "]t^" + format_exponent(n);
        }
        return out;
    }

private:
    void require_same_model(const SpecialPoly& other) const {
        if (!(model_ == other.model_)) throw std::invalid_argument("special poly: mixed ambient models");
    }

    // Addition preserves specialness (valuation of a sum never exceeds the
    // max), so only well-formedness is asserted here.
    void add_term(const ExpVec& n, const Coefficient& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(n);
        if (it == terms_.end()) {
            terms_.emplace(n, c);
        } else {
            Coefficient s = it->second + c;
            if (s.is_zero())
                terms_.erase(it);
            else
                it->second = std::move(s);
        }
    }

    ModelAlgebra model_;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Genuine polynomials in t_0..t_l with k°-coefficients, the input side of
// the special representation. Exponent vectors have length l+1 with slot 0
// for t_0; all entries nonnegative.

class RawPoly {
public:
    using TermMap = std::map<std::vector<long long>, Coefficient>;

    explicit RawPoly(unsigned l) : l_(l) {}

    unsigned l() const { return l_; }
    const TermMap& terms() const { return terms_; }

    static RawPoly monomial(unsigned l, const std::vector<long long>& n, const Coefficient& c) {
        RawPoly p(l);
        p.check(n);
        if (!c.is_zero()) p.terms_.emplace(n, c);
        return p;
    }

    static RawPoly constant(unsigned l, const Coefficient& c) {
        return monomial(l, std::vector<long long>(l + 1, 0), c);
    }

    // t_i as a raw monomial, 0 <= i <= l.
    static RawPoly variable(unsigned l, unsigned i) {
        std::vector<long long> n(l + 1, 0);
        n.at(i) = 1;
        return monomial(l, n, Coefficient::one());
    }

    friend RawPoly operator+(const RawPoly& a, const RawPoly& b) {
        a.require_same(b);
        RawPoly r = a;
        for (const auto& [n, c] : b.terms_) r.add_term(n, c);
        return r;
    }

    friend RawPoly operator*(const RawPoly& a, const RawPoly& b) {
        a.require_same(b);
        RawPoly r(a.l_);
        for (const auto& [na, ca] : a.terms_)
            for (const auto& [nb, cb] : b.terms_) {
                std::vector<long long> n(na.size());
                for (std::size_t i = 0; i < n.size(); ++i) n[i] = na[i] + nb[i];
                r.add_term(n, ca * cb);
            }
        return r;
    }

private:
    void check(const std::vector<long long>& n) const {
        if (n.size() != l_ + 1) throw std::invalid_argument("raw poly: expected exponent length l+1");
        for (long long e : n)
            if (e < 0) throw std::invalid_argument("raw poly: negative exponent in a genuine polynomial");
    }

    void require_same(const RawPoly& b) const {
        if (l_ != b.l_) throw std::invalid_argument("raw poly: mixed variable counts");
    }

    void add_term(const std::vector<long long>& n, const Coefficient& c) {
        check(n);
        if (c.is_zero()) return;
        auto it = terms_.find(n);
        if (it == terms_.end()) {
            terms_.emplace(n, c);
        } else {
            Coefficient s = it->second + c;
            if (s.is_zero())
                terms_.erase(it);
            else
                it->second = std::move(s);
        }
    }

    unsigned l_ = 0;
    TermMap terms_;
};

// Eliminates t_0 via t_0 = pi * t_1^{-1}...t_m^{-1} (or the scalar pi when
// m = 0). Each unit of t_0-degree multiplies the coefficient by pi and
// lowers the first m exponents by one, which is exactly what keeps the
// result special.
inline SpecialPoly to_special(const RawPoly& raw, const ModelAlgebra& M) {
    if (raw.l() != M.l) throw std::invalid_argument("to_special: raw polynomial has wrong variable count");
    SpecialPoly::TermMap out;
    for (const auto& [n, c] : raw.terms()) {
        if (cmp(c.valuation(), Value::one()) == Order::greater)
            throw std::invalid_argument("to_special: coefficient outside the unit ball (not in k°)");
        long long d0 = n[0];
        ExpVec s(M.l, 0);
        for (unsigned i = 1; i <= M.l; ++i) s[i - 1] = n[i] - (i <= M.m ? d0 : 0);
        Coefficient scaled = c.scaled(pow(M.pi, Rational(d0)));
        auto it = out.find(s);
        if (it == out.end()) {
            out.emplace(std::move(s), std::move(scaled));
        } else {
            it->second = it->second + scaled;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return SpecialPoly(M, std::move(out));
}

// |a|_r = max_n |a_n| r^n over the stored special terms. The point must
// lie in Delta; zero tail coordinates kill terms with positive exponent
// there and are rejected under a negative one (which cannot occur for
// tails, but simplex coordinates are positive by membership).
inline Value eval(const SpecialPoly& a, const SkeletonPoint& p) {
    Skeleton sk(a.model());
    sk.check_point(p);
    Value best = Value::zero();
    for (const auto& [n, c] : a.terms()) {
        Value term = c.valuation();
        bool vanished = false;
        for (unsigned i = 0; i < a.model().l && !vanished; ++i) {
            if (n[i] == 0) continue;
            const Value& ri = p.r[i];
            if (ri.is_zero()) {
                if (n[i] < 0)
                    throw std::invalid_argument("eval: zero coordinate r_" + std::to_string(i + 1) +
                                                " raised to a negative exponent");
                vanished = true;
            } else {
                term = term * pow(ri, Rational(n[i]));
            }
        }
        if (vanished) continue;
        if (cmp(term, best) == Order::greater) best = term;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Domination of special monomials, on the raw (valuation, exponent) data.
// Criterion: |a| >= |b|, |a| pi^{n_i} >= |b| pi^{n'_i} for 1 <= i <= m,
// and n_i <= n'_i for i > m. Equivalent to divisibility in A and to
// |a|_r >= |b|_r on all of Delta.

inline bool monomial_dominates(const ModelAlgebra& M, const Value& va, const ExpVec& na, const Value& vb,
                               const ExpVec& nb) {
    if (cmp(va, vb) == Order::less) return false;
    for (unsigned i = 0; i < M.m; ++i) {
        Value lhs = va * pow(M.pi, Rational(na[i]));
        Value rhs = vb * pow(M.pi, Rational(nb[i]));
        if (cmp(lhs, rhs) == Order::less) return false;
    }
    for (unsigned i = M.m; i < M.l; ++i)
        if (na[i] > nb[i]) return false;
    return true;
}

inline bool dominates_criterion(const ModelAlgebra& M, const SpecialMonomial& a, const SpecialMonomial& b) {
    check_exponent(M, a.n);
    check_exponent(M, b.n);
    return monomial_dominates(M, a.coeff.valuation(), a.n, b.coeff.valuation(), b.n);
}

// Divisibility witness: c with b = a * c, c special. The exponent is
// forced to n_b - n_a and the coefficient to the exact quotient; presence
// coincides with the domination criterion whenever both coefficients are
// single-term.
inline std::optional<SpecialMonomial> divides_witness(const ModelAlgebra& M, const SpecialMonomial& a,
                                                      const SpecialMonomial& b) {
    check_exponent(M, a.n);
    check_exponent(M, b.n);
    if (a.coeff.is_zero()) throw std::invalid_argument("divides_witness: zero divisor");
    if (b.coeff.is_zero()) throw std::invalid_argument("divides_witness: zero dividend");
    ExpVec nc = sub_exponents(b.n, a.n);
    for (unsigned i = M.m; i < M.l; ++i)
        if (nc[i] < 0) return std::nullopt;
    auto q = divide_exact(b.coeff, a.coeff);
    if (!q || q->is_zero()) return std::nullopt;
    if (!is_special(M, nc, *q)) return std::nullopt;
    return SpecialMonomial{std::move(nc), std::move(*q)};
}

// The exponent whose term dominates every other stored term, if any. When
// several terms dominate mutually (possible only for pi = 1, and then they
// share their tail exponents), the lexicographically first one is
// returned.
inline std::optional<ExpVec> dominating_monomial(const SpecialPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("dominating_monomial: zero polynomial");
    const ModelAlgebra& M = a.model();
    for (const auto& [nd, cd] : a.terms()) {
        Value vd = cd.valuation();
        bool all = true;
        for (const auto& [n, c] : a.terms()) {
            if (&n == &nd) continue;
            if (!monomial_dominates(M, vd, nd, c.valuation(), n)) {
                all = false;
                break;
            }
        }
        if (all) return nd;
    }
    return std::nullopt;
}

// Unit in R = A_q: the constant term exists and has valuation exactly 1
// (equivalently |a|_Delta is the constant function 1).
inline bool is_unit_R(const SpecialPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("is_unit_R: zero polynomial");
    const Coefficient* c0 = a.constant_term();
    return c0 && cmp(c0->valuation(), Value::one()) == Order::equal;
}

// Generic unit (unit in R_eta): a dominating monomial exists with zero
// tail exponents.
inline bool is_unit_R_eta(const SpecialPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("is_unit_R_eta: zero polynomial");
    auto d = dominating_monomial(a);
    if (!d) return false;
    for (unsigned i = a.model().m; i < a.model().l; ++i)
        if ((*d)[i] != 0) return false;
    return true;
}

struct GenericUnitFactorization {
    SpecialPoly unit;        // u, a unit of R
    Coefficient pi_prime;    // scalar in k°, nonzero
    std::vector<long long> powers;  // exponents of t_0..t_m
};

// a = u * pi' * t_0^{p_0} ... t_m^{p_m} with u an R-unit. Construction:
// take the dominating exponent d (zero tail), shift by c = -min(0, d) to
// clear negatives, set pi' = a_d * pi^{-c}, and divide a termwise by
// a_d t^d.
inline GenericUnitFactorization factor_generic_unit(const SpecialPoly& a) {
    if (!is_unit_R_eta(a)) throw std::domain_error("factor_generic_unit: not a generic unit");
    const ModelAlgebra& M = a.model();
    ExpVec d = *dominating_monomial(a);
    const Coefficient& ad = a.terms().at(d);

    long long c = -min_head(M, d);
    std::vector<long long> powers(M.m + 1, 0);
    powers[0] = c;
    for (unsigned i = 1; i <= M.m; ++i) powers[i] = d[i - 1] + c;

    Coefficient pi_prime = ad.scaled(pow(M.pi, Rational(-c)));

    SpecialMonomial divisor{d, ad};
    SpecialPoly::TermMap unit_terms;
    for (const auto& [n, coeff] : a.terms()) {
        auto w = divides_witness(M, divisor, SpecialMonomial{n, coeff});
        if (!w)
            throw std::runtime_error("factor_generic_unit: termwise quotient at " + format_exponent(n) +
                                     " leaves the coefficient model");
        unit_terms.emplace(w->n, w->coeff);
    }
    return {SpecialPoly(M, std::move(unit_terms)), std::move(pi_prime), std::move(powers)};
}

// Rebuilds u * pi' * prod t_i^{p_i} as a special polynomial, for roundtrip
// checks against the factored element.
inline SpecialPoly recompose_generic_unit(const ModelAlgebra& M, const GenericUnitFactorization& f) {
    if (f.powers.size() != M.m + 1) throw std::invalid_argument("recompose: expected m+1 exponents");
    long long p0 = f.powers[0];
    ExpVec n(M.l, 0);
    for (unsigned i = 1; i <= M.m; ++i) n[i - 1] = f.powers[i] - p0;
    Coefficient scalar = f.pi_prime.scaled(pow(M.pi, Rational(p0)));
    SpecialPoly mono = SpecialPoly::monomial(M, n, scalar);
    return f.unit * mono;
}

}  // namespace sskel
