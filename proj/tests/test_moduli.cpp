#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpa/chen.hpp"
#include "lpa/moduli.hpp"

#include "fixtures.hpp"

using namespace lpa;
using namespace lpa::fixtures;

TEST_CASE("expected dimension formula") {
    for (int n = 2; n <= 5; ++n) {
        Graph g = Graph::bouquet(n);
        for (int d = 0; d <= 5; ++d)
            CHECK(expected_dim(g, DimVector{d}) ==
                  static_cast<long long>(n - 1) * d * d + 1);
    }
    // the one-edge two-vertex graph at (1,1): 1 - 1 - 1 + 1 = 0
    Graph line = Graph::line(2);
    CHECK(expected_dim(line, DimVector{1, 1}) == 0);
    CHECK(expected_dim(line, DimVector{0, 2}) == -3);
}

TEST_CASE("stabilizer at a Schur point") {
    FieldCtx Q = FieldCtx::rationals();
    Graph b2 = Graph::bouquet(2);
    // the polynomial-twisted module on the 2-cycle with a linear twist:
    // endomorphisms are scalars, so the transverse dimension matches
    Poly lin = poly_from_coeffs(Q, {Q.from_int(-1), Q.one()}); // x - 1
    Rep r = anh_nam(b2, Q, Path{0, {0, 1}}, lin);
    StabilizerReport s = stabilizer_check(r);
    CHECK(s.commutant_dim == 1);
    CHECK(s.end_dim == 1);
    CHECK(s.schur);
    CHECK(s.transverse_dim == 5);
    CHECK(s.expected == 5);
}

TEST_CASE("stabilizer on non-Schur points") {
    FieldCtx Q = FieldCtx::rationals();
    Graph b2 = Graph::bouquet(2);
    Rep one = make_rep(b2, Q, {1}, {mk(Q, 1, 1, {2}), mk(Q, 1, 1, {3})});
    StabilizerReport s1 = stabilizer_check(one);
    CHECK(s1.commutant_dim == 1); // commutant of scalars

    Rep ds = direct_sum(one, one);
    StabilizerReport s2 = stabilizer_check(ds);
    CHECK(s2.commutant_dim >= 4);
    CHECK_FALSE(s2.schur);

    // the quadratic-twist module: its endomorphisms form the quadratic
    // field, so the commutant has dimension two
    Poly p = poly_from_coeffs(Q, {Q.one(), Q.zero(), Q.one()});
    Rep cpn = make_rep(b2, Q, {2}, {companion_matrix(Q, p), Mat(2, 2, Q.zero())});
    StabilizerReport s3 = stabilizer_check(cpn);
    CHECK(s3.commutant_dim == 2);
    CHECK(s3.end_dim == 2);
}

TEST_CASE("commutant equals End on random representations") {
    FieldCtx F3 = FieldCtx::prime_field(3);
    std::mt19937_64 rng(17);
    for (int it = 0; it < 30; ++it) {
        Rep r = random_rep(Graph::line(2), F3, 2, rng);
        StabilizerReport s = stabilizer_check(r); // internally asserts equality
        CHECK(s.commutant_dim == s.end_dim);
    }
}

TEST_CASE("orbit counting at dimension one matches the punctured-space count") {
    Graph b2 = Graph::bouquet(2);
    {
        ModuliProblem p{b2, DimVector{1}, FieldCtx::prime_field(2)};
        OrbitReport rep = enumerate_and_count(p);
        CHECK(rep.total_reps == 4);
        CHECK(rep.irreducible_count == 4);
        CHECK(rep.class_count == 4);
        CHECK(rep.nonzero_class_count == 3); // q^n - 1 at q = 2
        CHECK(rep.representatives.size() == 4);
    }
    {
        ModuliProblem p{b2, DimVector{1}, FieldCtx::prime_field(3)};
        OrbitReport rep = enumerate_and_count(p);
        CHECK(rep.total_reps == 9);
        CHECK(rep.class_count == 9);
        CHECK(rep.nonzero_class_count == 8);
    }
}

TEST_CASE("empty stable locus for the one-edge graph at (0,2)") {
    Graph line = Graph::line(2);
    ModuliProblem p{line, DimVector{0, 2}, FieldCtx::prime_field(2)};
    OrbitReport rep = enumerate_and_count(p);
    CHECK(rep.total_reps == 1); // no matrix entries at all
    CHECK(rep.irreducible_count == 0);
    CHECK(rep.class_count == 0);
}

TEST_CASE("orbit counting is isomorphism-consistent") {
    Graph b2 = Graph::bouquet(2);
    ModuliProblem p{b2, DimVector{1}, FieldCtx::prime_field(3)};
    OrbitReport rep = enumerate_and_count(p);
    for (size_t i = 0; i < rep.representatives.size(); ++i)
        for (size_t j = 0; j < rep.representatives.size(); ++j) {
            IsoResult res = is_isomorphic(rep.representatives[i], rep.representatives[j], 1);
            REQUIRE(res.verdict != Verdict::Unknown);
            CHECK((res.verdict == Verdict::Yes) == (i == j));
        }
}

TEST_CASE("orbit enumeration at dimension two stays consistent") {
    // small but nontrivial: one loop plus one extra edge src->dst over F2
    Graph g = Graph::make({"a", "b"}, {{"e1", "a", "a"}, {"e2", "a", "b"}});
    ModuliProblem p{g, DimVector{1, 1}, FieldCtx::prime_field(2)};
    OrbitReport rep = enumerate_and_count(p);
    CHECK(rep.total_reps == 4);
    CHECK(rep.irreducible_count <= rep.total_reps);
    CHECK(rep.class_count <= rep.irreducible_count);
    // representatives pairwise nonisomorphic
    for (size_t i = 0; i < rep.representatives.size(); ++i)
        for (size_t j = i + 1; j < rep.representatives.size(); ++j)
            CHECK(is_isomorphic(rep.representatives[i], rep.representatives[j], 1).verdict ==
                  Verdict::No);
    // irreducibles have commutant = End and idempotent-free End at desk size
    for (const Rep& r : rep.representatives) {
        StabilizerReport s = stabilizer_check(r);
        CHECK(s.commutant_dim == s.end_dim);
        CHECK(is_indecomposable(r, 3).verdict == Verdict::Yes);
    }
}

TEST_CASE("budget guard") {
    Graph b2 = Graph::bouquet(2);
    ModuliProblem p{b2, DimVector{3}, FieldCtx::prime_field(5)};
    CHECK_THROWS_AS(enumerate_and_count(p, 1000), Error);
}

TEST_CASE("irreducible monic census") {
    CHECK(count_irreducible_monic(FieldCtx::prime_field(2), 1) == 2);
    CHECK(count_irreducible_monic(FieldCtx::prime_field(2), 2) == 1);
    CHECK(count_irreducible_monic(FieldCtx::prime_field(2), 3) == 2);
    CHECK(count_irreducible_monic(FieldCtx::prime_field(3), 2) == 3);
    CHECK(count_irreducible_monic(FieldCtx::prime_field(5), 1) == 5);
}

TEST_CASE("generalized Chen census") {
    {
        ChenSubvarietyReport rep = chen_subvariety_report(2, 1, FieldCtx::prime_field(3));
        CHECK(rep.lambda_family == 4); // |W_1| (q-1) = 2*2
        CHECK(rep.twisted_families.empty());
        CHECK(rep.total == 4);
        CHECK(rep.ambient == 9); // q^((n-1)d^2+1) = 3^2
    }
    {
        ChenSubvarietyReport rep = chen_subvariety_report(2, 2, FieldCtx::prime_field(2));
        CHECK(rep.lambda_family == 1); // |W_2| * 1
        REQUIRE(rep.twisted_families.size() == 1);
        CHECK(rep.twisted_families[0].cycle_len == 1);
        CHECK(rep.twisted_families[0].poly_deg == 2);
        CHECK(rep.twisted_families[0].count == 2); // |W_1| * |IP_2(F_2)| = 2*1
        CHECK(rep.ambient == 32);                  // 2^5
        CHECK_FALSE(rep.note.empty());
    }
}

TEST_CASE("every enumerated irreducible is a Schur point over the prime field") {
    Graph b2 = Graph::bouquet(2);
    ModuliProblem p{b2, DimVector{1}, FieldCtx::prime_field(3)};
    OrbitReport rep = enumerate_and_count(p);
    for (const Rep& r : rep.representatives) {
        StabilizerReport s = stabilizer_check(r);
        CHECK(s.commutant_dim == s.end_dim);
        CHECK(s.commutant_dim == 1);
    }
}
