#include <sskel/generators.hpp>
#include <sskel/pl_function.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace sskel;

namespace {
Value v(long long n, long long d) { return Value::from_fraction(n, d); }
ModelAlgebra model_11() { return ModelAlgebra(1, 1, v(1, 2)); }
ModelAlgebra model_21() { return ModelAlgebra(2, 1, v(1, 2)); }
}  // namespace

TEST_CASE("skeleton vertices") {
    Skeleton sk1(model_11());
    auto verts = sk1.vertices();
    REQUIRE(verts.size() == 2);
    CHECK(verts[0].r == std::vector<Value>{Value::one()});   // rho_0: r_0 = pi
    CHECK(verts[1].r == std::vector<Value>{v(1, 2)});        // rho_1: r_1 = pi

    Skeleton sk0(ModelAlgebra(2, 0, v(1, 3)));
    auto v0 = sk0.vertices();
    REQUIRE(v0.size() == 1);
    CHECK(v0[0].r == std::vector<Value>{Value::one(), Value::one()});

    Skeleton sk2(model_21());
    auto v2 = sk2.vertices();
    REQUIRE(v2.size() == 2);
    CHECK(v2[0].r.back() == Value::one());
    CHECK(v2[1].r.back() == Value::one());
}

TEST_CASE("pl_geq on the domination examples") {
    ModelAlgebra M = model_11();
    PLFunction f_t0 = PLFunction::from_term(M, {M.pi, {-1}});
    PLFunction g_pi = PLFunction::from_term(M, {M.pi, {0}});
    CHECK(pl_geq(f_t0, g_pi) == PLCompare::holds);
    CHECK(pl_geq(f_t0, f_t0) == PLCompare::holds);

    ModelAlgebra M2 = model_21();
    PLFunction f_t1 = PLFunction::from_term(M2, {Value::one(), {1, 0}});
    PLFunction g_t2 = PLFunction::from_term(M2, {Value::one(), {0, 1}});
    CHECK(pl_geq(f_t1, g_t2) == PLCompare::fails);  // refuted at r_1 = pi, r_2 = 1
    CHECK(pl_geq(g_t2, f_t1) == PLCompare::fails);
}

TEST_CASE("reduction drops dominated terms") {
    ModelAlgebra M = model_11();
    // pi + t_1 reduces to the single term t_1.
    SpecialPoly p = SpecialPoly::constant(M, Coefficient::of_value(M.pi)) +
                    SpecialPoly::monomial(M, {1}, Coefficient::one());
    PLFunction f = PLFunction::from_poly(p);
    auto power = is_power_on_delta(f);
    REQUIRE(power.has_value());
    CHECK(power->n == ExpVec{1});
    CHECK(power->c == Value::one());

    // A single monomial is its own power function.
    PLFunction mono = PLFunction::from_term(M, {v(1, 4), {-1}});
    REQUIRE(is_power_on_delta(mono).has_value());

    // t_1 + t_2 has two incomparable terms.
    ModelAlgebra M2 = model_21();
    SpecialPoly q = SpecialPoly::monomial(M2, {1, 0}, Coefficient::one()) +
                    SpecialPoly::monomial(M2, {0, 1}, Coefficient::one());
    CHECK(!is_power_on_delta(PLFunction::from_poly(q)).has_value());
}

TEST_CASE("unit polynomials have constant pl shadow") {
    // 1 + t_1 is a unit of R; its shadow reduces to the constant 1.
    ModelAlgebra M = model_11();
    SpecialPoly u = SpecialPoly::one(M) + SpecialPoly::monomial(M, {1}, Coefficient::one());
    PLFunction f = PLFunction::from_poly(u);
    auto power = is_power_on_delta(f);
    REQUIRE(power.has_value());
    CHECK(power->n == ExpVec{0});
    CHECK(power->c == Value::one());
    CHECK(check_product_power_property(f, f));
}

TEST_CASE("product power property on monomials") {
    ModelAlgebra M = model_21();
    PLFunction a = PLFunction::from_term(M, {v(1, 2), {1, 0}});
    PLFunction b = PLFunction::from_term(M, {v(1, 3), {0, 2}});
    CHECK(check_product_power_property(a, b));
}

TEST_CASE("product power property on random pairs") {
    gen::Rng rng(0x90DE);
    for (int i = 0; i < 1000; ++i) {
        ModelAlgebra M = gen::random_model(rng);
        PLFunction f = PLFunction::from_poly(gen::random_special_poly(rng, M, 4));
        PLFunction g = PLFunction::from_poly(gen::random_special_poly(rng, M, 4));
        REQUIRE(check_product_power_property(f, g));
    }
}

TEST_CASE("vertex criterion agrees with the domination criterion") {
    gen::Rng rng(0x7E57);
    for (int i = 0; i < 2000; ++i) {
        ModelAlgebra M = gen::random_model(rng);
        auto a = gen::random_special_monomial(rng, M);
        auto b = gen::random_special_monomial(rng, M);
        PLFunction fa = PLFunction::from_term(M, {a.coeff.valuation(), a.n});
        PLFunction fb = PLFunction::from_term(M, {b.coeff.valuation(), b.n});
        bool dom = dominates_criterion(M, a, b);
        PLCompare pl = pl_geq(fa, fb);
        REQUIRE(pl != PLCompare::unknown);
        CHECK(dom == (pl == PLCompare::holds));
        // A holds verdict is never refuted by exact evaluation.
        if (pl == PLCompare::holds) {
            for (int j = 0; j < 5; ++j) {
                SkeletonPoint p = gen::random_point(rng, M);
                CHECK(cmp(fa.eval(p), fb.eval(p)) != Order::less);
            }
        }
    }
}

TEST_CASE("reduction never changes pointwise values and is idempotent") {
    gen::Rng rng(0x1DEA);
    for (int i = 0; i < 400; ++i) {
        ModelAlgebra M = gen::random_model(rng);
        SpecialPoly a = gen::random_special_poly(rng, M, 5);
        PLFunction f = PLFunction::from_poly(a);
        PLFunction again(M, f.terms());
        CHECK(again == f);
        for (int j = 0; j < 4; ++j) {
            SkeletonPoint p = gen::random_point(rng, M, true);
            // eval on the special poly maximizes over the unreduced terms.
            CHECK(f.eval(p) == eval(a, p));
        }
    }
}

TEST_CASE("is_power matches evaluation") {
    gen::Rng rng(0xFACE);
    int present = 0;
    for (int i = 0; i < 400; ++i) {
        ModelAlgebra M = gen::random_model(rng);
        PLFunction f = PLFunction::from_poly(gen::random_special_poly(rng, M, 4));
        auto power = is_power_on_delta(f);
        if (!power) continue;
        ++present;
        PLFunction pf = PLFunction::from_term(M, *power);
        Skeleton sk(M);
        for (const auto& p : sk.vertices()) CHECK(f.eval(p) == pf.eval(p));
        for (int j = 0; j < 10; ++j) {
            SkeletonPoint p = gen::random_point(rng, M, true);
            CHECK(f.eval(p) == pf.eval(p));
        }
    }
    CHECK(present > 50);  // the property actually got exercised
}

TEST_CASE("three-way equivalence of the domination lemma") {
    gen::Rng rng(0x3A11);
    for (int i = 0; i < 2000; ++i) {
        ModelAlgebra M = gen::random_model(rng);
        auto a = gen::random_special_monomial(rng, M);
        auto b = gen::random_special_monomial(rng, M);
        bool crit = dominates_criterion(M, a, b);
        bool divis = divides_witness(M, a, b).has_value();
        PLCompare pl = pl_geq(PLFunction::from_term(M, {a.coeff.valuation(), a.n}),
                              PLFunction::from_term(M, {b.coeff.valuation(), b.n}));
        REQUIRE(crit == divis);
        REQUIRE(crit == (pl == PLCompare::holds));
        if (divis) {
            auto w = *divides_witness(M, a, b);
            SpecialPoly prod = SpecialPoly::monomial(M, a.n, a.coeff) * SpecialPoly::monomial(M, w.n, w.coeff);
            CHECK(prod == SpecialPoly::monomial(M, b.n, b.coeff));
        }
    }
}
