#pragma once

// The value group |k^x| restricted to rational-power values: a nonzero
// element is a finite product of prime powers p^{e_p} with rational
// exponents e_p, kept in canonical form (no zero exponents). Zero is a
// distinguished element below everything. Every comparison is exact:
// clearing exponent denominators reduces it to a big-integer comparison.

#include <sskel/rational.hpp>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <string>

namespace sskel {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

// Deterministic Miller-Rabin, valid for the full 64-bit range.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Global cap on exponent denominators. Operations that would create an
// exponent with a larger denominator throw instead of silently producing
// huge clearing factors in comparisons.
inline std::atomic<std::uint64_t>& max_exponent_denominator_slot() {
    static std::atomic<std::uint64_t> cap{64};
    return cap;
}
inline std::uint64_t max_exponent_denominator() { return max_exponent_denominator_slot().load(); }
inline void set_max_exponent_denominator(std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("exponent denominator cap must be positive");
    max_exponent_denominator_slot().store(cap);
}

enum class Order { less, equal, greater };

inline const char* to_string(Order o) {
    switch (o) {
        case Order::less: return "less";
        case Order::equal: return "equal";
        case Order::greater: return "greater";
    }
    return "?";
}

class Value {
public:
    using FactorMap = std::map<std::uint64_t, Rational>;

    Value() : zero_(true) {}

    static Value zero() { return Value(); }

    static Value one() {
        Value v;
        v.zero_ = false;
        return v;
    }

    static Value prime_power(std::uint64_t p, const Rational& e) {
        if (!is_prime_u64(p)) throw std::invalid_argument("value: " + std::to_string(p) + " is not prime");
        Value v = one();
        if (e != 0) v.exp_[p] = e;
        v.check_caps();
        return v;
    }

    static Value from_factors(FactorMap factors) {
        Value v = one();
        for (auto& [p, e] : factors) {
            if (!is_prime_u64(p)) throw std::invalid_argument("value: " + std::to_string(p) + " is not prime");
            if (e != 0) v.exp_.emplace(p, std::move(e));
        }
        v.check_caps();
        return v;
    }

    // Factors a positive rational into prime powers by trial division.
    static Value from_rational(const Rational& q) {
        if (q == 0) return zero();
        if (q < 0) throw std::domain_error("value: absolute values are nonnegative");
        Value v = one();
        v.accumulate_factorization(numerator(q), 1);
        v.accumulate_factorization(denominator(q), -1);
        v.strip_zeros();
        return v;
    }

    static Value from_fraction(long long num, long long den) {
        return from_rational(make_rational(Int(num), Int(den)));
    }

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && exp_.empty(); }

    const FactorMap& factors() const {
        if (zero_) throw std::domain_error("value: zero has no factorization");
        return exp_;
    }

    friend Value operator*(const Value& a, const Value& b) {
        if (a.zero_ || b.zero_) return zero();
        Value r = a;
        for (const auto& [p, e] : b.exp_) {
            auto it = r.exp_.find(p);
            if (it == r.exp_.end()) {
                r.exp_.emplace(p, e);
            } else {
                it->second += e;
                if (it->second == 0) r.exp_.erase(it);
            }
        }
        r.check_caps();
        return r;
    }

    friend Value operator/(const Value& a, const Value& b) {
        if (b.zero_) throw std::domain_error("value: division by zero");
        if (a.zero_) return zero();
        return a * pow(b, Rational(-1));
    }

    friend Value pow(const Value& base, const Rational& q) {
        if (base.zero_) {
            if (q <= 0) throw std::domain_error("value: 0 cannot be raised to a nonpositive power");
            return zero();
        }
        Value r = one();
        if (q == 0) return r;
        for (const auto& [p, e] : base.exp_) {
            Rational ne = e * q;
            if (ne != 0) r.exp_.emplace(p, std::move(ne));
        }
        r.check_caps();
        return r;
    }

    friend Order cmp(const Value& a, const Value& b) {
        if (a.zero_ && b.zero_) return Order::equal;
        if (a.zero_) return Order::less;
        if (b.zero_) return Order::greater;

        // Per-prime exponent differences of a/b.
        std::map<std::uint64_t, Rational> diff;
        for (const auto& [p, e] : a.exp_) diff[p] += e;
        for (const auto& [p, e] : b.exp_) diff[p] -= e;
        for (auto it = diff.begin(); it != diff.end();) {
            it = (it->second == 0) ? diff.erase(it) : std::next(it);
        }
        if (diff.empty()) return Order::equal;

        // If every exponent has the same sign the comparison is immediate
        // (all primes exceed 1).
        bool any_pos = false, any_neg = false;
        for (const auto& entry : diff) (entry.second > 0 ? any_pos : any_neg) = true;
        if (!any_neg) return Order::greater;
        if (!any_pos) return Order::less;

        // Mixed signs: clear denominators with D = lcm and compare the
        // integer products on each side.
        Int d_common = 1;
        for (const auto& [p, e] : diff) d_common = lcm_int(d_common, denominator(e));
        Int lhs = 1, rhs = 1;
        for (const auto& [p, e] : diff) {
            Int g = numerator(e) * (d_common / denominator(e));
            Int& side = (g > 0) ? lhs : rhs;
            Int mag = boost::multiprecision::abs(g);
            if (mag > 2'000'000) throw std::overflow_error("value: comparison exponent too large after clearing denominators");
            side *= boost::multiprecision::pow(Int(p), mag.convert_to<unsigned>());
        }
        if (lhs == rhs) return Order::equal;
        return lhs > rhs ? Order::greater : Order::less;
    }

    friend bool operator==(const Value& a, const Value& b) {
        return a.zero_ == b.zero_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
    friend bool operator<(const Value& a, const Value& b) { return cmp(a, b) == Order::less; }
    friend bool operator>(const Value& a, const Value& b) { return cmp(a, b) == Order::greater; }
    friend bool operator<=(const Value& a, const Value& b) { return cmp(a, b) != Order::greater; }
    friend bool operator>=(const Value& a, const Value& b) { return cmp(a, b) != Order::less; }

    // Floating-point estimate of log(value); display and heuristics only.
    double log_estimate() const {
        if (zero_) throw std::domain_error("value: log of zero");
        double s = 0.0;
        for (const auto& [p, e] : exp_) s += e.convert_to<double>() * std::log(static_cast<double>(p));
        return s;
    }

    double estimate() const { return zero_ ? 0.0 : std::exp(log_estimate()); }

    std::string str() const {
        if (zero_) return "0";
        if (exp_.empty()) return "1";
        std::string out;
        for (const auto& [p, e] : exp_) {
            if (!out.empty()) out += "*";
            out += std::to_string(p);
            if (e != 1) out += "^" + format_rational(e);
        }
        return out;
    }

private:
    void strip_zeros() {
        for (auto it = exp_.begin(); it != exp_.end();) {
            it = (it->second == 0) ? exp_.erase(it) : std::next(it);
        }
    }

    void check_caps() const {
        const Int cap(max_exponent_denominator());
        for (const auto& [p, e] : exp_) {
            if (denominator(e) > cap) {
                throw std::overflow_error("value: exponent denominator " + denominator(e).str() +
                                          " exceeds cap " + cap.str() +
                                          " (see --max-denominator)");
            }
        }
    }

    void accumulate_factorization(Int n, int sign) {
        if (n <= 0) throw std::domain_error("value: factorization of nonpositive integer");
        for (Int p = 2; p * p <= n; ++p) {
            int k = 0;
            while (n % p == 0) { n /= p; ++k; }
            if (k) exp_[p.convert_to<std::uint64_t>()] += Rational(sign * k);
        }
        if (n > 1) {
            if (n > Int(std::numeric_limits<std::uint64_t>::max()))
                throw std::overflow_error("value: prime factor does not fit in 64 bits");
            exp_[n.convert_to<std::uint64_t>()] += Rational(sign);
        }
    }

    bool zero_;
    FactorMap exp_;
};

// Exact membership in the coset class r^Q: returns q with v = r^q, or
// nothing. Correct because distinct primes are multiplicatively
// independent, so the exponent vectors must be proportional.
inline std::optional<Rational> in_r_power_class(const Value& v, const Value& r) {
    if (v.is_zero() || r.is_zero()) throw std::invalid_argument("r-power class: zero operand");
    if (r.is_one()) throw std::invalid_argument("r-power class: reference radius 1 is degenerate");
    Rational q = 0;
    const auto& rf = r.factors();
    const auto& vf = v.factors();
    auto first = rf.begin();
    if (auto it = vf.find(first->first); it != vf.end()) q = it->second / first->second;
    // Verify v = r^q on the union of supports.
    for (const auto& [p, e] : rf) {
        auto it = vf.find(p);
        Rational ve = (it == vf.end()) ? Rational(0) : it->second;
        if (ve != e * q) return std::nullopt;
    }
    for (const auto& [p, e] : vf) {
        if (!rf.count(p)) return std::nullopt;  // prime outside r's support
    }
    return q;
}

// Additive mirror of the nonzero part of the value group: log v as the
// formal sum of e_p * log(p). Ordered the same way as the values.
class LogValue {
public:
    LogValue() = default;

    explicit LogValue(const Value& v) : exp_(v.factors()) {}

    static LogValue of(const Value& v) { return LogValue(v); }

    Value exp_value() const {
        Value::FactorMap f = exp_;
        return Value::from_factors(std::move(f));
    }

    const Value::FactorMap& terms() const { return exp_; }

    friend LogValue operator+(const LogValue& a, const LogValue& b) {
        return LogValue(a.exp_value() * b.exp_value());
    }
    friend LogValue operator-(const LogValue& a, const LogValue& b) {
        return LogValue(a.exp_value() / b.exp_value());
    }
    friend LogValue operator*(const Rational& c, const LogValue& a) {
        return LogValue(pow(a.exp_value(), c));
    }

    // sign(log v) = sign of v - 1.
    int sign() const {
        switch (cmp(exp_value(), Value::one())) {
            case Order::less: return -1;
            case Order::equal: return 0;
            case Order::greater: return 1;
        }
        return 0;
    }

    friend Order cmp(const LogValue& a, const LogValue& b) { return cmp(a.exp_value(), b.exp_value()); }
    friend bool operator==(const LogValue& a, const LogValue& b) { return a.exp_ == b.exp_; }

    double estimate() const {
        double s = 0.0;
        for (const auto& [p, e] : exp_) s += e.convert_to<double>() * std::log(static_cast<double>(p));
        return s;
    }

private:
    Value::FactorMap exp_;
};

inline LogValue log(const Value& v) { return LogValue(v); }

// Strict-order functor so Values can key ordered containers.
struct ValueLess {
    bool operator()(const Value& a, const Value& b) const { return cmp(a, b) == Order::less; }
};

}  // namespace sskel
