#pragma once

// Deterministic choice of the splitting element: given a target radius
// r_t, an exponent bound e and the reference radius r, produce
//     s = |lambda| = r_t * r^q   with   r_t^e < s < 1   (both strict),
// where q is the admissible rational of smallest denominator, then
// smallest absolute numerator, negative preferred. Existence: the
// admissible q form an open interval, nonempty because e is in (0,1), and
// membership is decidable exactly, so a denominator scan with per-
// denominator binary searches terminates.

#include <sskel/value.hpp>

#include <boost/multiprecision/cpp_int.hpp>

namespace sskel {

struct LambdaChoice {
    Value s;     // |lambda|
    Rational q;  // class certificate: s = target * r^q
};

namespace detail {

// s(q) = r_t * r^q is strictly decreasing in q for r < 1, so
// upper(q) := (s(q) < 1) is an up-set and lower(q) := (s(q) > r_t^e) is a
// down-set in q.
struct LambdaPredicates {
    const Value& target;
    const Value& r;
    Value floor_value;  // r_t^e

    bool upper(const Rational& q) const { return cmp(target * pow(r, q), Value::one()) == Order::less; }
    bool lower(const Rational& q) const { return cmp(target * pow(r, q), floor_value) == Order::greater; }
};

// Least integer n with pred(n/d) true, for an up-set pred that is
// eventually true and eventually false.
template <typename Pred>
Int least_satisfying(const Pred& pred, const Int& d) {
    Int hi = 0, step = 1;
    while (!pred(make_rational(hi, d))) {
        hi += step;
        step *= 2;
    }
    Int lo = hi - 1;
    step = 1;
    while (pred(make_rational(lo, d))) {
        lo -= step;
        step *= 2;
    }
    // pred(lo/d) false, pred(hi/d) true.
    while (lo + 1 < hi) {
        Int mid = floor_div(lo + hi, 2);
        (pred(make_rational(mid, d)) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace detail

inline LambdaChoice choose_lambda(const Value& target, const Rational& e, const Value& r) {
    if (target.is_zero() || cmp(target, Value::one()) != Order::less)
        throw std::invalid_argument("choose_lambda: target radius must lie strictly in (0, 1)");
    if (r.is_zero() || cmp(r, Value::one()) != Order::less)
        throw std::invalid_argument("choose_lambda: reference radius must lie strictly in (0, 1)");
    if (e <= 0 || e >= 1) throw std::invalid_argument("choose_lambda: exponent bound must lie strictly in (0, 1)");

    detail::LambdaPredicates P{target, r, pow(target, e)};

    for (Int d = 1;; ++d) {
        if (d > 4096) throw std::runtime_error("choose_lambda: denominator scan exhausted");
        // n_low = least n with s(n/d) < 1; n_high = greatest n with
        // s(n/d) > r_t^e (its complement is an up-set).
        Int n_low = detail::least_satisfying([&](const Rational& q) { return P.upper(q); }, d);
        Int n_high = detail::least_satisfying([&](const Rational& q) { return !P.lower(q); }, d) - 1;
        if (n_low > n_high) continue;

        Int limit = boost::multiprecision::max(boost::multiprecision::abs(n_low), boost::multiprecision::abs(n_high));
        for (Int k = 0; k <= limit; ++k) {
            for (int sign : {-1, +1}) {
                Int n = sign * k;
                if (n < n_low || n > n_high) continue;
                if (boost::multiprecision::gcd(boost::multiprecision::abs(n), d) != 1) continue;
                Rational q = make_rational(n, d);
                return LambdaChoice{target * pow(r, q), q};
            }
        }
    }
}

}  // namespace sskel
