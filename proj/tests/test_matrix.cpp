#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "lpa/matrix.hpp"

using namespace lpa;

namespace {

Mat mk(const FieldCtx& f, int r, int c, std::vector<long> vals) {
    Mat m(r, c, f.zero());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = f.from_int(vals[static_cast<size_t>(i * c + j)]);
    return m;
}

Poly mkpoly(const FieldCtx& f, std::vector<long> cs) {
    std::vector<Scalar> v;
    for (long c : cs) v.push_back(f.from_int(c));
    return poly_from_coeffs(f, v);
}

// independent characteristic polynomial: Laplace expansion of det(xI - A)
// over polynomial entries (test-only oracle)
Poly charpoly_laplace(const FieldCtx& f, const Mat& a) {
    int n = a.rows();
    std::vector<std::vector<Poly>> m(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly e = poly_scalar(f, f.neg(a.at(i, j)));
            if (i == j) e = poly_add(f, e, poly_x(f));
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
        }
    // recursive expansion along the first row
    std::function<Poly(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rows, std::vector<int> cols) -> Poly {
        if (rows.empty()) return poly_one(f);
        Poly acc = poly_zero();
        for (size_t k = 0; k < cols.size(); ++k) {
            std::vector<int> r2(rows.begin() + 1, rows.end());
            std::vector<int> c2;
            for (size_t j = 0; j < cols.size(); ++j)
                if (j != k) c2.push_back(cols[j]);
            Poly term = poly_mul(f, m[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[k])], det(r2, c2));
            if (k % 2 == 1) term = poly_scale(f, f.from_int(-1), term);
            acc = poly_add(f, acc, term);
        }
        return acc;
    };
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) idx.push_back(i);
    return det(idx, idx);
}

} // namespace

TEST_CASE("rref, rank, nullspace") {
    FieldCtx Q = FieldCtx::rationals();
    Mat a = mk(Q, 3, 3, {1, 2, 3, 2, 4, 6, 1, 1, 1});
    CHECK(mat_rank(Q, a) == 2);
    Mat ns = nullspace(Q, a);
    CHECK(ns.cols() == 1);
    CHECK(mat_is_zero(Q, mat_mul(Q, a, ns)));

    Mat b = mk(Q, 2, 2, {1, 0, 0, 1});
    CHECK(nullspace(Q, b).cols() == 0);

    // degenerate shapes
    Mat z0(0, 3);
    CHECK(nullspace(Q, z0).cols() == 3);
    Mat z1(3, 0);
    CHECK(nullspace(Q, z1).cols() == 0);
    CHECK(mat_rank(Q, z0) == 0);
}

TEST_CASE("rcef canonicalizes column spaces") {
    FieldCtx F5 = FieldCtx::prime_field(5);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        Mat a = mat_sample(F5, 4, 3, rng);
        Mat b = mat_mul(F5, a, mat_sample(F5, 3, 5, rng));
        // span(b) ⊆ span(a); equality of spans iff equal rcef
        Mat ra = rcef(F5, a), rb = rcef(F5, b);
        if (mat_rank(F5, a) == mat_rank(F5, b)) CHECK(mat_eq(F5, ra, rb));
        CHECK(col_space_contains(F5, ra, rb));
        CHECK(mat_eq(F5, rcef(F5, ra), ra));
    }
}

TEST_CASE("det, inverse, solve") {
    FieldCtx Q = FieldCtx::rationals();
    Mat a = mk(Q, 2, 2, {1, 2, 3, 4});
    CHECK(Q.eq(mat_det(Q, a), Q.from_int(-2)));
    Mat ai = mat_inverse(Q, a);
    CHECK(mat_eq(Q, mat_mul(Q, a, ai), Mat::identity(Q, 2)));
    Mat v = mk(Q, 2, 1, {5, 6});
    Mat x = solve_in_col_space(Q, a, v);
    CHECK(mat_eq(Q, mat_mul(Q, a, x), v));
    Mat sing = mk(Q, 2, 2, {1, 2, 2, 4});
    CHECK(Q.is_zero(mat_det(Q, sing)));
    CHECK_THROWS_AS(mat_inverse(Q, sing), Error);
}

TEST_CASE("span operations") {
    FieldCtx F3 = FieldCtx::prime_field(3);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        Mat a = rcef(F3, mat_sample(F3, 4, 2, rng));
        Mat b = rcef(F3, mat_sample(F3, 4, 2, rng));
        Mat s = span_sum(F3, a, b);
        Mat i = span_intersect(F3, a, b);
        CHECK(col_space_contains(F3, s, a));
        CHECK(col_space_contains(F3, s, b));
        CHECK(col_space_contains(F3, a, i));
        CHECK(col_space_contains(F3, b, i));
        // modularity of dimensions
        CHECK(s.cols() + i.cols() == a.cols() + b.cols());
    }
}

TEST_CASE("preimage") {
    FieldCtx Q = FieldCtx::rationals();
    Mat m = mk(Q, 2, 2, {0, 1, 0, 0});
    Mat b(2, 0); // zero subspace -> preimage is the kernel
    Mat pre = preimage(Q, m, b);
    CHECK(pre.cols() == 1);
    CHECK(mat_is_zero(Q, mat_mul(Q, m, pre)));
}

TEST_CASE("companion matrix and characteristic polynomial") {
    FieldCtx Q = FieldCtx::rationals();
    Poly f = mkpoly(Q, {1, 0, 1}); // x^2+1
    Mat c = companion_matrix(Q, f);
    CHECK(mat_eq(Q, c, mk(Q, 2, 2, {0, -1, 1, 0})));
    CHECK(poly_eq(Q, char_poly(Q, c), f));

    Poly lin = mkpoly(Q, {-7, 1}); // x - 7
    Mat c1 = companion_matrix(Q, lin);
    CHECK(c1.rows() == 1);
    CHECK(Q.eq(c1.at(0, 0), Q.from_int(7)));
    CHECK_THROWS_AS(companion_matrix(Q, mkpoly(Q, {1, 2})), Error);
}

TEST_CASE("char_poly agrees with Laplace oracle on random matrices") {
    std::mt19937_64 rng(23);
    for (auto f : {FieldCtx::rationals(), FieldCtx::prime_field(3)}) {
        for (int n = 0; n <= 4; ++n)
            for (int it = 0; it < 20; ++it) {
                Mat a = mat_sample(f, n, n, rng);
                CHECK(poly_eq(f, char_poly(f, a), charpoly_laplace(f, a)));
            }
    }
}

TEST_CASE("companion round trip exhaustive over F2 and F3 up to degree 5") {
    for (auto f : {FieldCtx::prime_field(2), FieldCtx::prime_field(3)}) {
        long p = f.p();
        for (int d = 1; d <= 5; ++d) {
            long count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (long code = 0; code < count; ++code) {
                std::vector<Scalar> cs;
                long c = code;
                for (int i = 0; i < d; ++i) {
                    cs.push_back(f.from_int(c % p));
                    c /= p;
                }
                cs.push_back(f.one());
                Poly poly = poly_from_coeffs(f, cs);
                CHECK(poly_eq(f, char_poly(f, companion_matrix(f, poly)), poly));
            }
        }
    }
}

TEST_CASE("min_poly divides char_poly and annihilates") {
    std::mt19937_64 rng(5);
    FieldCtx F5 = FieldCtx::prime_field(5);
    for (int it = 0; it < 40; ++it) {
        Mat a = mat_sample(F5, 3, 3, rng);
        Poly mp = min_poly(F5, a);
        CHECK(mat_is_zero(F5, poly_apply(F5, mp, a)));
        Poly cp = char_poly(F5, a);
        Poly q, r;
        poly_divmod(F5, cp, mp, q, r);
        CHECK(r.is_zero());
    }
}
