#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpa/field.hpp"

using namespace lpa;

TEST_CASE("rational arithmetic is exact and canonical") {
    FieldCtx Q = FieldCtx::rationals();
    Scalar a = Q.parse("1/2"), b = Q.parse("1/3");
    CHECK(Q.to_string(Q.add(a, b)) == "5/6");
    CHECK(Q.to_string(Q.sub(a, b)) == "1/6");
    CHECK(Q.to_string(Q.mul(a, b)) == "1/6");
    CHECK(Q.to_string(Q.div(a, b)) == "3/2");
    CHECK(Q.to_string(Q.parse("-6/4")) == "-3/2");
    CHECK(Q.to_string(Q.parse("4/2")) == "2");
    CHECK_THROWS_AS(Q.div(a, Q.zero()), Error);
}

TEST_CASE("prime field arithmetic") {
    FieldCtx F5 = FieldCtx::prime_field(5);
    CHECK(F5.to_string(F5.mul(F5.from_int(3), F5.from_int(4))) == "2");
    FieldCtx F2 = FieldCtx::prime_field(2);
    CHECK(F2.is_zero(F2.add(F2.one(), F2.one())));
    CHECK(F5.eq(F5.div(F5.from_int(1), F5.from_int(2)), F5.from_int(3)));
    CHECK_THROWS_AS(FieldCtx::prime_field(6), Error);
    CHECK_THROWS_AS(FieldCtx::prime_field(1), Error);
    CHECK(F5.eq(F5.parse("4"), F5.from_int(-1)));
}

TEST_CASE("field axioms on random triples") {
    for (auto f : {FieldCtx::rationals(), FieldCtx::prime_field(5), FieldCtx::prime_field(2)}) {
        std::mt19937_64 rng(1234);
        for (int it = 0; it < 1000; ++it) {
            Scalar a = f.sample(rng), b = f.sample(rng), c = f.sample(rng);
            CHECK(f.eq(f.add(a, f.add(b, c)), f.add(f.add(a, b), c)));
            CHECK(f.eq(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c)));
            CHECK(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
            CHECK(f.eq(f.add(a, f.neg(a)), f.zero()));
            if (!f.is_zero(a)) CHECK(f.eq(f.mul(a, f.inv(a)), f.one()));
        }
    }
}

TEST_CASE("scalar text round trip") {
    for (auto f : {FieldCtx::rationals(), FieldCtx::prime_field(7)}) {
        std::mt19937_64 rng(99);
        for (int it = 0; it < 200; ++it) {
            Scalar a = f.sample(rng);
            CHECK(f.eq(f.parse(f.to_string(a)), a));
        }
    }
    FieldCtx Q = FieldCtx::rationals();
    CHECK_THROWS_AS(Q.parse(""), Error);
    CHECK_THROWS_AS(Q.parse("x"), Error);
    CHECK_THROWS_AS(Q.parse("1/0"), Error);
    CHECK_THROWS_AS(Q.parse("1.5"), Error);
}

static Poly mk(const FieldCtx& f, std::vector<long> cs) {
    std::vector<Scalar> v;
    for (long c : cs) v.push_back(f.from_int(c));
    return poly_from_coeffs(f, v);
}

TEST_CASE("polynomial arithmetic") {
    FieldCtx Q = FieldCtx::rationals();
    Poly p = mk(Q, {1, 0, 1});  // x^2 + 1
    Poly q = mk(Q, {-1, 1});    // x - 1
    Poly prod = poly_mul(Q, p, q);
    CHECK(poly_eq(Q, prod, mk(Q, {-1, 1, -1, 1})));
    Poly quo, rem;
    poly_divmod(Q, prod, q, quo, rem);
    CHECK(poly_eq(Q, quo, p));
    CHECK(rem.is_zero());
    CHECK(poly_eq(Q, poly_gcd(Q, prod, q), q));
    CHECK(Q.eq(poly_eval(Q, p, Q.from_int(2)), Q.from_int(5)));
}

TEST_CASE("irreducibility decisions") {
    FieldCtx Q = FieldCtx::rationals();
    FieldCtx F5 = FieldCtx::prime_field(5);
    CHECK(poly_is_irreducible(Q, mk(Q, {1, 0, 1})));        // x^2+1 over Q
    CHECK_FALSE(poly_is_irreducible(F5, mk(F5, {1, 0, 1}))); // 2^2 = -1 mod 5
    CHECK_FALSE(poly_is_irreducible(Q, mk(Q, {-1, 0, 1})));  // (x-1)(x+1)
    CHECK(poly_is_irreducible(Q, mk(Q, {-2, 0, 1})));        // x^2-2
    // x^4+1: reducible mod every prime, irreducible over Q
    CHECK(poly_is_irreducible(Q, mk(Q, {1, 0, 0, 0, 1})));
    CHECK_FALSE(poly_is_irreducible(FieldCtx::prime_field(2), mk(FieldCtx::prime_field(2), {1, 0, 0, 0, 1})));
    CHECK_THROWS_AS(poly_is_irreducible(Q, mk(Q, {1, 2})), Error); // not monic
    // degree cap over Q
    Poly big = mk(Q, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(poly_is_irreducible(Q, big), Error);
}

TEST_CASE("factorization over F_p and Q") {
    FieldCtx F2 = FieldCtx::prime_field(2);
    // x^4 + x = x (x+1) (x^2+x+1)
    Poly f = mk(F2, {0, 1, 0, 0, 1});
    auto fac = poly_factor(F2, f);
    int deg_sum = 0;
    Poly prod = poly_one(F2);
    for (auto& [g, m] : fac) {
        CHECK(poly_is_irreducible(F2, g));
        for (int i = 0; i < m; ++i) prod = poly_mul(F2, prod, g);
        deg_sum += g.degree() * m;
    }
    CHECK(deg_sum == 4);
    CHECK(poly_eq(F2, prod, f));

    FieldCtx Q = FieldCtx::rationals();
    // (x^2+1)(x-3)^2
    Poly g = poly_mul(Q, mk(Q, {1, 0, 1}), poly_mul(Q, mk(Q, {-3, 1}), mk(Q, {-3, 1})));
    auto qf = poly_factor(Q, g);
    CHECK(qf.size() == 2);
    int quad = 0, lin = 0;
    for (auto& [h, m] : qf) {
        if (h.degree() == 2) { quad = m; CHECK(poly_eq(Q, h, mk(Q, {1, 0, 1}))); }
        if (h.degree() == 1) { lin = m; CHECK(poly_eq(Q, h, mk(Q, {-3, 1}))); }
    }
    CHECK(quad == 1);
    CHECK(lin == 2);
}

TEST_CASE("factorization over F_p with repeated and frobenius factors") {
    FieldCtx F3 = FieldCtx::prime_field(3);
    // (x+1)^3 (x^2+1): derivative of the cube vanishes, exercising the p-th
    // power branch
    Poly cube = poly_one(F3);
    for (int i = 0; i < 3; ++i) cube = poly_mul(F3, cube, mk(F3, {1, 1}));
    Poly f = poly_mul(F3, cube, mk(F3, {1, 0, 1}));
    auto fac = poly_factor(F3, f);
    Poly prod = poly_one(F3);
    for (auto& [g, m] : fac)
        for (int i = 0; i < m; ++i) prod = poly_mul(F3, prod, g);
    CHECK(poly_eq(F3, prod, poly_monic(F3, f)));
    CHECK(fac.size() == 2);
}
