#include <sskel/generators.hpp>
#include <sskel/value.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace sskel;

namespace {

Value v_frac(long long n, long long d) { return Value::from_fraction(n, d); }

// Independent estimate of log(value) with a conservative absolute error
// bound; used to cross-check exact comparisons.
struct LogEstimate {
    double log;
    double err;
};

LogEstimate estimate_log(const Value& v) {
    double s = 0.0, a = 0.0;
    for (const auto& [p, e] : v.factors()) {
        double t = e.convert_to<double>() * std::log(static_cast<double>(p));
        s += t;
        a += std::fabs(t);
    }
    return {s, (a + 1.0) * 1e-12};
}

}  // namespace

TEST_CASE("cmp on plain rationals") {
    CHECK(cmp(v_frac(1, 2), v_frac(1, 3)) == Order::greater);
    CHECK(cmp(v_frac(1, 3), v_frac(1, 2)) == Order::less);
    CHECK(cmp(v_frac(1, 2), v_frac(1, 2)) == Order::equal);
}

TEST_CASE("canonical form identifies (1/4)^(1/2) with 1/2") {
    Value a = pow(v_frac(1, 4), Rational(1, 2));
    Value b = v_frac(1, 2);
    CHECK(a == b);
    CHECK(cmp(a, b) == Order::equal);
    CHECK(a.factors() == Value::FactorMap{{2, Rational(-1)}});
}

TEST_CASE("cmp needs big-integer cross multiplication for mixed signs") {
    // Oracle: (1/2)^3 = 1/8 and (1/3)^2 = 1/9; 1/8 > 1/9 because 9 > 8.
    const long long lhs_den = 2 * 2 * 2;
    const long long rhs_den = 3 * 3;
    REQUIRE(rhs_den > lhs_den);
    Value a = pow(v_frac(1, 2), Rational(3));
    Value b = pow(v_frac(1, 3), Rational(2));
    CHECK(cmp(a, b) == Order::greater);
}

TEST_CASE("zero sits strictly below every nonzero value") {
    CHECK(cmp(Value::zero(), v_frac(1, 100)) == Order::less);
    CHECK(cmp(v_frac(1, 100), Value::zero()) == Order::greater);
    CHECK(cmp(Value::zero(), Value::zero()) == Order::equal);
}

TEST_CASE("mul and pow") {
    CHECK(v_frac(1, 2) * v_frac(1, 3) == v_frac(1, 6));
    CHECK(pow(v_frac(1, 4), Rational(1, 2)) == v_frac(1, 2));
    // Oracle: (2/3)^(-2) = 9/4 by integer squaring.
    CHECK(pow(v_frac(2, 3), Rational(-2)) == v_frac(9, 4));
    CHECK(pow(Value::zero(), Rational(2)) == Value::zero());
    CHECK_THROWS_AS(pow(Value::zero(), Rational(0)), std::domain_error);
    CHECK_THROWS_AS(pow(Value::zero(), Rational(-1)), std::domain_error);
}

TEST_CASE("division") {
    CHECK(v_frac(1, 6) / v_frac(1, 3) == v_frac(1, 2));
    CHECK_THROWS_AS(v_frac(1, 2) / Value::zero(), std::domain_error);
    CHECK(Value::zero() / v_frac(1, 2) == Value::zero());
}

TEST_CASE("r-power class membership") {
    CHECK(in_r_power_class(v_frac(1, 8), v_frac(1, 2)) == Rational(3));
    CHECK(!in_r_power_class(v_frac(1, 3), v_frac(1, 2)).has_value());
    // (2/3)*(3/2) = 1 lies in every class with exponent 0.
    CHECK(in_r_power_class(v_frac(2, 3) * v_frac(3, 2), v_frac(1, 2)) == Rational(0));
    CHECK_THROWS_AS(in_r_power_class(v_frac(1, 2), Value::one()), std::invalid_argument);
    CHECK_THROWS_AS(in_r_power_class(Value::zero(), v_frac(1, 2)), std::invalid_argument);
}

TEST_CASE("r-power class on exhaustive small grid") {
    for (long long den = 1; den <= 12; ++den) {
        for (long long num = -3 * den; num <= 3 * den; ++num) {
            Rational q = make_rational(Int(num), Int(den));
            for (const Value& r : {v_frac(1, 2), v_frac(2, 3), v_frac(1, 6)}) {
                auto back = in_r_power_class(pow(r, q), r);
                REQUIRE(back.has_value());
                CHECK(*back == q);
            }
        }
    }
}

TEST_CASE("value construction validation") {
    CHECK_THROWS_AS(Value::from_factors({{4, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(Value::prime_power(1, Rational(1)), std::invalid_argument);
    CHECK(Value::prime_power(2, Rational(0)) == Value::one());
    CHECK_THROWS_AS(Value::from_rational(Rational(-1, 2)), std::domain_error);
    CHECK(Value::from_rational(Rational(0)) == Value::zero());
}

TEST_CASE("exponent denominator cap is enforced") {
    auto old = max_exponent_denominator();
    set_max_exponent_denominator(8);
    CHECK_THROWS_AS(pow(v_frac(1, 2), Rational(1, 9)), std::overflow_error);
    CHECK_NOTHROW(pow(v_frac(1, 2), Rational(1, 8)));
    set_max_exponent_denominator(old);
}

TEST_CASE("log value mirrors multiplication additively") {
    Value v = pow(v_frac(1, 2), Rational(1, 3));
    Value w = v_frac(3, 5);
    CHECK(log(v * w) == log(v) + log(w));
    CHECK(log(v / w) == log(v) - log(w));
    CHECK((Rational(2) * log(v)) == log(pow(v, Rational(2))));
    CHECK(log(v).sign() == -1);
    CHECK(log(Value::one()).sign() == 0);
    CHECK(log(v_frac(3, 2)).sign() == 1);
    CHECK(log(v).exp_value() == v);
}

TEST_CASE("randomized order properties") {
    gen::Rng rng(0xC0FFEE);
    const auto& primes = gen::default_primes();
    for (int trial = 0; trial < 2000; ++trial) {
        Value a = rng.value(primes, 6, 6);
        Value b = rng.value(primes, 6, 6);
        Value c = rng.value(primes, 6, 6);

        // Antisymmetry.
        Order ab = cmp(a, b), ba = cmp(b, a);
        if (ab == Order::equal) {
            CHECK(ba == Order::equal);
            CHECK(a == b);
        } else {
            CHECK(ba != ab);
        }

        // Transitivity through a third element.
        if (cmp(a, b) != Order::greater && cmp(b, c) != Order::greater) CHECK(cmp(a, c) != Order::greater);

        // Translation invariance.
        CHECK(cmp(a * c, b * c) == cmp(a, b));

        // Homomorphism into the log group.
        CHECK(log(a * b) == log(a) + log(b));

        // Agreement with the float estimate whenever it separates.
        auto ea = estimate_log(a), eb = estimate_log(b);
        if (std::fabs(ea.log - eb.log) > ea.err + eb.err) {
            CHECK(cmp(a, b) == (ea.log > eb.log ? Order::greater : Order::less));
        }
    }
}
