#pragma once

// Exact scalar arithmetic. All rationals in this library are arbitrary
// precision; overflow is never an accepted failure mode.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace sskel {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    return Rational(num, den);
}

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string format_rational(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline std::optional<Rational> try_parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(Int(text));
        }
        std::string ns = text.substr(0, slash);
        std::string ds = text.substr(slash + 1);
        if (!is_int(ns) || !is_int(ds)) return std::nullopt;
        Int d(ds);
        if (d == 0) return std::nullopt;
        return Rational(Int(ns), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline Rational parse_rational(const std::string& text) {
    auto q = try_parse_rational(text);
    if (!q) throw std::invalid_argument("rational: cannot parse \"" + text + "\"");
    return *q;
}

inline Int floor_div(const Int& a, const Int& b) {
    // b > 0 assumed; rounds toward minus infinity.
    Int q = a / b, r = a % b;
    if (r != 0 && a < 0) --q;
    return q;
}

inline Int floor_rational(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

inline Int ceil_rational(const Rational& q) {
    Int f = floor_rational(q);
    return (Rational(f) == q) ? f : f + 1;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

}  // namespace sskel
