#include <sskel/coefficient.hpp>
#include <sskel/generators.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace sskel;

namespace {
Value v(long long n, long long d) { return Value::from_fraction(n, d); }
Coefficient rand_coeff(gen::Rng& rng, int max_terms) {
    Coefficient c;
    int k = static_cast<int>(rng.uniform(0, max_terms));
    for (int i = 0; i < k; ++i)
        c = c + Coefficient::term(rng.rational(5, 3), rng.value(gen::default_primes(), 4, 4));
    return c;
}
}  // namespace

TEST_CASE("valuation is the maximal gamma") {
    Coefficient c = Coefficient::term(Rational(2), v(1, 3)) + Coefficient::term(Rational(-1), v(1, 2));
    CHECK(c.valuation() == v(1, 2));
    CHECK(Coefficient::zero().valuation() == Value::zero());
    CHECK(Coefficient::one().valuation() == Value::one());
}

TEST_CASE("like gammas combine and cancel") {
    Coefficient a = Coefficient::term(Rational(1), v(1, 2));
    Coefficient b = Coefficient::term(Rational(-1), v(1, 2));
    CHECK((a + b).is_zero());
    CHECK((a + a) == Coefficient::term(Rational(2), v(1, 2)));
}

TEST_CASE("product of nonzero coefficients is nonzero") {
    gen::Rng rng(0xBEEF);
    for (int i = 0; i < 500; ++i) {
        Coefficient a = rand_coeff(rng, 4);
        Coefficient b = rand_coeff(rng, 4);
        if (a.is_zero() || b.is_zero()) continue;
        Coefficient p = a * b;
        REQUIRE(!p.is_zero());
        // Valuation is multiplicative: leading terms cannot cancel.
        CHECK(p.valuation() == a.valuation() * b.valuation());
    }
}

TEST_CASE("single-term division always succeeds") {
    Coefficient a = Coefficient::term(Rational(3), v(1, 4)) + Coefficient::term(Rational(1), v(1, 2));
    Coefficient b = Coefficient::term(Rational(2), v(1, 2));
    auto q = divide_exact(a, b);
    REQUIRE(q.has_value());
    CHECK(*q * b == a);
}

TEST_CASE("multi-term division recovers exact quotients") {
    gen::Rng rng(0xF00D);
    for (int i = 0; i < 300; ++i) {
        Coefficient b = rand_coeff(rng, 3);
        Coefficient q = rand_coeff(rng, 3);
        if (b.is_zero() || q.is_zero()) continue;
        auto got = divide_exact(q * b, b);
        REQUIRE(got.has_value());
        CHECK(*got == q);
    }
}

TEST_CASE("non-divisible pairs are rejected, not approximated") {
    // 1 / (1 - gamma) would be an infinite geometric series.
    Coefficient one = Coefficient::one();
    Coefficient b = one - Coefficient::term(Rational(1), v(1, 2));
    CHECK(!divide_exact(one, b).has_value());
    CHECK_THROWS_AS(divide_exact(one, Coefficient::zero()), std::domain_error);
}
