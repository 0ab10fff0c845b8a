#pragma once

// Seeded random generators for property suites. Deterministic for a given
// seed so failures are reproducible.

#include <sskel/special_poly.hpp>
#include <sskel/value.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace sskel::gen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    long long uniform(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng_);
    }

    bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p; }

    // Nonzero rational with |numerator| <= max_num and denominator <= max_den.
    Rational rational(long long max_num, long long max_den, bool allow_negative = true) {
        long long n = uniform(1, max_num);
        long long d = uniform(1, max_den);
        if (allow_negative && chance(0.5)) n = -n;
        return make_rational(Int(n), Int(d));
    }

    // Nonzero value supported on the given primes, exponents bounded as above.
    Value value(const std::vector<std::uint64_t>& primes, long long max_num, long long max_den) {
        Value::FactorMap f;
        for (auto p : primes) {
            if (chance(0.6)) continue;
            Rational e = rational(max_num, max_den);
            if (e != 0) f[p] = e;
        }
        return Value::from_factors(std::move(f));
    }

    // Value in (0, 1]: all exponents negative.
    Value small_value(const std::vector<std::uint64_t>& primes, long long max_num, long long max_den) {
        Value::FactorMap f;
        for (auto p : primes) {
            if (chance(0.5)) continue;
            long long n = uniform(1, max_num);
            long long d = uniform(1, max_den);
            f[p] = make_rational(Int(-n), Int(d));
        }
        return Value::from_factors(std::move(f));
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline const std::vector<std::uint64_t>& default_primes() {
    static const std::vector<std::uint64_t> ps{2, 3, 5};
    return ps;
}

// Random ambient model with l, m <= 3 and pi in (0, 1].
inline ModelAlgebra random_model(Rng& rng, unsigned max_l = 3, long long max_num = 4, long long max_den = 6) {
    unsigned l = static_cast<unsigned>(rng.uniform(0, max_l));
    unsigned m = static_cast<unsigned>(rng.uniform(0, l));
    Value pi = rng.small_value(default_primes(), max_num, max_den);
    if (pi.is_one() && rng.chance(0.9)) pi = pow(Value::from_fraction(1, 2), rng.rational(max_num, max_den, false));
    return ModelAlgebra(l, m, pi);
}

inline ExpVec random_exponent(Rng& rng, const ModelAlgebra& M, long long max_abs = 3) {
    ExpVec n(M.l, 0);
    for (unsigned i = 0; i < M.l; ++i) n[i] = (i < M.m) ? rng.uniform(-max_abs, max_abs) : rng.uniform(0, max_abs);
    return n;
}

// Coefficient with valuation within the specialness bound at n.
inline Coefficient random_special_coefficient(Rng& rng, const ModelAlgebra& M, const ExpVec& n, int max_terms = 2) {
    Value bound = specialness_bound(M, n);
    Coefficient c;
    int k = static_cast<int>(rng.uniform(1, max_terms));
    for (int i = 0; i < k; ++i) {
        Value gamma = rng.small_value(default_primes(), 3, 4) * bound;
        c = c + Coefficient::term(rng.rational(4, 3), gamma);
    }
    if (c.is_zero()) c = Coefficient::of_value(bound);
    return c;
}

inline SpecialMonomial random_special_monomial(Rng& rng, const ModelAlgebra& M, int max_coeff_terms = 1) {
    ExpVec n = random_exponent(rng, M);
    return {n, random_special_coefficient(rng, M, n, max_coeff_terms)};
}

inline SpecialPoly random_special_poly(Rng& rng, const ModelAlgebra& M, int max_terms = 6, int max_coeff_terms = 2) {
    SpecialPoly p(M);
    int k = static_cast<int>(rng.uniform(1, max_terms));
    for (int i = 0; i < k; ++i) {
        auto mono = random_special_monomial(rng, M, max_coeff_terms);
        p = p + SpecialPoly::monomial(M, mono.n, mono.coeff);
    }
    if (p.is_zero()) p = SpecialPoly::one(M);
    return p;
}

// Point of Delta with positive simplex coordinates; tail coordinates in
// (0, 1], optionally allowing exact zeros.
inline SkeletonPoint random_point(Rng& rng, const ModelAlgebra& M, bool allow_zero_tail = false,
                                  unsigned depth = 6) {
    SkeletonPoint p;
    p.r.reserve(M.l);
    // Simplex block: exponents of pi summing to at most 1.
    long long budget = depth;
    for (unsigned i = 0; i < M.m; ++i) {
        long long j = rng.uniform(0, budget);
        budget -= j;
        p.r.push_back(pow(M.pi, Rational(j, depth)));
    }
    for (unsigned i = M.m; i < M.l; ++i) {
        if (allow_zero_tail && rng.chance(0.15)) {
            p.r.push_back(Value::zero());
        } else {
            p.r.push_back(pow(Value::from_fraction(1, 2), Rational(rng.uniform(0, 8), 4)));
        }
    }
    return p;
}

}  // namespace sskel::gen
