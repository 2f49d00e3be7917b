#ifndef LPA_MATRIX_HPP
#define LPA_MATRIX_HPP

#include <vector>

#include "lpa/field.hpp"

namespace lpa {

// Dense matrix over an exact field, row-major. Zero rows/columns are legal
// everywhere; a 0xN or Nx0 matrix is the empty map between the corresponding
// spaces.
class Mat {
public:
    Mat() : nr_(0), nc_(0) {}
    Mat(int rows, int cols, const Scalar& fill = Scalar{})
        : nr_(rows), nc_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

    int rows() const { return nr_; }
    int cols() const { return nc_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * nc_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * nc_ + j]; }

    static Mat identity(const FieldCtx& f, int n) {
        Mat m(n, n, f.zero());
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

private:
    int nr_, nc_;
    std::vector<Scalar> a_;
};

bool mat_eq(const FieldCtx& f, const Mat& a, const Mat& b);
bool mat_is_zero(const FieldCtx& f, const Mat& a);

Mat mat_add(const FieldCtx& f, const Mat& a, const Mat& b);
Mat mat_sub(const FieldCtx& f, const Mat& a, const Mat& b);
Mat mat_mul(const FieldCtx& f, const Mat& a, const Mat& b);
Mat mat_scale(const FieldCtx& f, const Scalar& s, const Mat& a);
Mat mat_neg(const FieldCtx& f, const Mat& a);
Mat mat_transpose(const Mat& a);
Mat mat_hstack(const FieldCtx& f, const Mat& a, const Mat& b);
Mat mat_vstack(const FieldCtx& f, const Mat& a, const Mat& b);
Mat mat_block_diag(const FieldCtx& f, const Mat& a, const Mat& b);
Mat mat_col(const Mat& a, int j);
Mat mat_cols(const Mat& a, const std::vector<int>& js);

// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(const FieldCtx& f, Mat& m);

int mat_rank(const FieldCtx& f, Mat m);

// Canonical basis of the column space: reduced column echelon form with
// zero columns dropped. Two matrices span the same column space iff their
// rcef images are entrywise equal.
Mat rcef(const FieldCtx& f, const Mat& m);

// Basis of the right kernel, one column per basis vector (rcef-canonical).
Mat nullspace(const FieldCtx& f, const Mat& m);

Scalar mat_det(const FieldCtx& f, Mat m);
bool mat_invertible(const FieldCtx& f, const Mat& m);
Mat mat_inverse(const FieldCtx& f, const Mat& m); // DivisionByZero if singular

// Does v lie in the column space of basis (basis need not be canonical)?
bool in_col_space(const FieldCtx& f, const Mat& basis, const Mat& v);

// All columns of sub inside the column space of basis?
bool col_space_contains(const FieldCtx& f, const Mat& basis, const Mat& sub);

// Solve basis * x = v; requires v in the column space (checked).
Mat solve_in_col_space(const FieldCtx& f, const Mat& basis, const Mat& v);

// span(a) + span(b), canonical.
Mat span_sum(const FieldCtx& f, const Mat& a, const Mat& b);

// span(a) ∩ span(b), canonical.
Mat span_intersect(const FieldCtx& f, const Mat& a, const Mat& b);

// {x : m x ∈ span(b)}, canonical.
Mat preimage(const FieldCtx& f, const Mat& m, const Mat& b);

// Characteristic polynomial det(xI - A), monic; Samuelson-Berkowitz, valid
// over any field including small characteristic.
Poly char_poly(const FieldCtx& f, const Mat& a);

// f(A) by Horner.
Mat poly_apply(const FieldCtx& f, const Poly& p, const Mat& a);

// Minimal polynomial of A (monic): least-degree monic p with p(A) = 0.
Poly min_poly(const FieldCtx& f, const Mat& a);

// d x d companion matrix of a monic polynomial: multiplication by x on
// k[x]/f in the power basis; char_poly(companion(f)) = f.
Mat companion_matrix(const FieldCtx& f, const Poly& p);

Mat mat_sample(const FieldCtx& f, int rows, int cols, std::mt19937_64& rng);

std::string mat_to_string(const FieldCtx& f, const Mat& a);

} // namespace lpa

#endif
