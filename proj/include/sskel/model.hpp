#pragma once

// Ambient model algebra k°[t_0..t_l]/(t_0...t_m - pi) and the exponent
// vectors of its special (Laurent) representations. The eliminated
// variable t_0 never appears in stored exponents: a vector has length l,
// entry i-1 belonging to t_i; the first m entries range over Z, the rest
// over N.

#include <sskel/value.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace sskel {

struct ModelAlgebra {
    unsigned l = 0;
    unsigned m = 0;
    Value pi;

    ModelAlgebra() : pi(Value::one()) {}
    ModelAlgebra(unsigned l_, unsigned m_, Value pi_) : l(l_), m(m_), pi(std::move(pi_)) { validate(); }

    void validate() const {
        if (m > l) throw std::invalid_argument("model: m exceeds l");
        if (pi.is_zero()) throw std::invalid_argument("model: pi must be nonzero");
        if (cmp(pi, Value::one()) == Order::greater) throw std::invalid_argument("model: pi must lie in the unit ball");
    }

    friend bool operator==(const ModelAlgebra& a, const ModelAlgebra& b) {
        return a.l == b.l && a.m == b.m && a.pi == b.pi;
    }
    friend bool operator!=(const ModelAlgebra& a, const ModelAlgebra& b) { return !(a == b); }
};

using ExpVec = std::vector<long long>;

inline void check_exponent(const ModelAlgebra& M, const ExpVec& n) {
    if (n.size() != M.l) throw std::invalid_argument("exponent: expected length " + std::to_string(M.l));
    for (std::size_t i = M.m; i < n.size(); ++i) {
        if (n[i] < 0)
            throw std::invalid_argument("exponent: tail coordinate t_" + std::to_string(i + 1) + " must be nonnegative");
    }
}

inline bool is_zero_exponent(const ExpVec& n) {
    return std::all_of(n.begin(), n.end(), [](long long x) { return x == 0; });
}

// min(0, n_1..n_m); 0 when m = 0.
inline long long min_head(const ModelAlgebra& M, const ExpVec& n) {
    long long v = 0;
    for (unsigned i = 0; i < M.m; ++i) v = std::min(v, n[i]);
    return v;
}

// |pi|^{-min(0, n_1..n_m)}: the specialness ceiling for a coefficient at n.
inline Value specialness_bound(const ModelAlgebra& M, const ExpVec& n) {
    return pow(M.pi, Rational(-min_head(M, n)));
}

inline ExpVec add_exponents(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ExpVec sub_exponents(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline std::string format_exponent(const ExpVec& n) {
    std::string s = "(";
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(n[i]);
    }
    return s + ")";
}

}  // namespace sskel
