#include "lpa/matrix.hpp"

#include <sstream>

namespace lpa {

bool mat_eq(const FieldCtx& f, const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!f.eq(a.at(i, j), b.at(i, j))) return false;
    return true;
}

bool mat_is_zero(const FieldCtx& f, const Mat& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!f.is_zero(a.at(i, j))) return false;
    return true;
}

static void require_same_shape(const Mat& a, const Mat& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorCode::ShapeMismatch, std::string(op) + ": shape mismatch");
}

Mat mat_add(const FieldCtx& f, const Mat& a, const Mat& b) {
    require_same_shape(a, b, "mat_add");
    Mat c(a.rows(), a.cols(), f.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = f.add(a.at(i, j), b.at(i, j));
    return c;
}

Mat mat_sub(const FieldCtx& f, const Mat& a, const Mat& b) {
    require_same_shape(a, b, "mat_sub");
    Mat c(a.rows(), a.cols(), f.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = f.sub(a.at(i, j), b.at(i, j));
    return c;
}

Mat mat_mul(const FieldCtx& f, const Mat& a, const Mat& b) {
    if (a.cols() != b.rows())
        fail(ErrorCode::ShapeMismatch, "mat_mul: inner dimensions disagree");
    Mat c(a.rows(), b.cols(), f.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
        }
    return c;
}

Mat mat_scale(const FieldCtx& f, const Scalar& s, const Mat& a) {
    Mat c(a.rows(), a.cols(), f.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = f.mul(s, a.at(i, j));
    return c;
}

Mat mat_neg(const FieldCtx& f, const Mat& a) { return mat_scale(f, f.from_int(-1), a); }

Mat mat_transpose(const Mat& a) {
    Mat c(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(j, i) = a.at(i, j);
    return c;
}

Mat mat_hstack(const FieldCtx& f, const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) fail(ErrorCode::ShapeMismatch, "hstack: row counts differ");
    Mat c(a.rows(), a.cols() + b.cols(), f.zero());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

Mat mat_vstack(const FieldCtx& f, const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "vstack: column counts differ");
    Mat c(a.rows() + b.rows(), a.cols(), f.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
    return c;
}

Mat mat_block_diag(const FieldCtx& f, const Mat& a, const Mat& b) {
    Mat c(a.rows() + b.rows(), a.cols() + b.cols(), f.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return c;
}

Mat mat_col(const Mat& a, int j) {
    Mat c(a.rows(), 1);
    for (int i = 0; i < a.rows(); ++i) c.at(i, 0) = a.at(i, j);
    return c;
}

Mat mat_cols(const Mat& a, const std::vector<int>& js) {
    Mat c(a.rows(), static_cast<int>(js.size()));
    for (size_t k = 0; k < js.size(); ++k)
        for (int i = 0; i < a.rows(); ++i) c.at(i, static_cast<int>(k)) = a.at(i, js[k]);
    return c;
}

std::vector<int> rref(const FieldCtx& f, Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!f.is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        Scalar inv = f.inv(m.at(row, col));
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(inv, m.at(row, j));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || f.is_zero(m.at(i, col))) continue;
            Scalar c = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int mat_rank(const FieldCtx& f, Mat m) { return static_cast<int>(rref(f, m).size()); }

Mat rcef(const FieldCtx& f, const Mat& m) {
    Mat t = mat_transpose(m);
    std::vector<int> piv = rref(f, t);
    Mat out(m.rows(), static_cast<int>(piv.size()), f.zero());
    for (size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < m.rows(); ++j) out.at(j, static_cast<int>(r)) = t.at(static_cast<int>(r), j);
    return out;
}

Mat nullspace(const FieldCtx& f, const Mat& m) {
    Mat r = m;
    std::vector<int> piv = rref(f, r);
    std::vector<bool> is_piv(static_cast<size_t>(m.cols()), false);
    for (int p : piv) is_piv[static_cast<size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_piv[static_cast<size_t>(j)]) free_cols.push_back(j);
    Mat out(m.cols(), static_cast<int>(free_cols.size()), f.zero());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        out.at(fc, static_cast<int>(k)) = f.one();
        for (size_t pi = 0; pi < piv.size(); ++pi)
            out.at(piv[pi], static_cast<int>(k)) = f.neg(r.at(static_cast<int>(pi), fc));
    }
    return rcef(f, out);
}

Scalar mat_det(const FieldCtx& f, Mat m) {
    if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "det of non-square matrix");
    int n = m.rows();
    Scalar det = f.one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!f.is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) return f.zero();
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = f.neg(det);
        }
        det = f.mul(det, m.at(col, col));
        Scalar inv = f.inv(m.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            if (f.is_zero(m.at(i, col))) continue;
            Scalar c = f.mul(inv, m.at(i, col));
            for (int j = col; j < n; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(col, j)));
        }
    }
    return det;
}

bool mat_invertible(const FieldCtx& f, const Mat& m) {
    return m.rows() == m.cols() && !f.is_zero(mat_det(f, m));
}

Mat mat_inverse(const FieldCtx& f, const Mat& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
    int n = m.rows();
    Mat aug = mat_hstack(f, m, Mat::identity(f, n));
    std::vector<int> piv = rref(f, aug);
    int left_pivots = 0;
    for (int p : piv)
        if (p < n) ++left_pivots;
    if (left_pivots != n) fail(ErrorCode::DivisionByZero, "matrix not invertible");
    Mat out(n, n, f.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

bool in_col_space(const FieldCtx& f, const Mat& basis, const Mat& v) {
    int rb = mat_rank(f, basis);
    return mat_rank(f, mat_hstack(f, basis, v)) == rb;
}

bool col_space_contains(const FieldCtx& f, const Mat& basis, const Mat& sub) {
    return in_col_space(f, basis, sub);
}

Mat solve_in_col_space(const FieldCtx& f, const Mat& basis, const Mat& v) {
    if (basis.rows() != v.rows()) fail(ErrorCode::ShapeMismatch, "solve: row counts differ");
    Mat aug = mat_hstack(f, basis, v);
    std::vector<int> piv = rref(f, aug);
    for (int p : piv)
        if (p >= basis.cols())
            fail(ErrorCode::ShapeMismatch, "solve: vector not in column space");
    Mat x(basis.cols(), v.cols(), f.zero());
    for (size_t pi = 0; pi < piv.size(); ++pi)
        for (int j = 0; j < v.cols(); ++j)
            x.at(piv[pi], j) = aug.at(static_cast<int>(pi), basis.cols() + j);
    return x;
}

Mat span_sum(const FieldCtx& f, const Mat& a, const Mat& b) {
    return rcef(f, mat_hstack(f, a, b));
}

Mat span_intersect(const FieldCtx& f, const Mat& a, const Mat& b) {
    if (a.cols() == 0 || b.cols() == 0) return Mat(a.rows(), 0);
    // solve a x = b y; intersection is a * (x-part of the kernel basis)
    Mat sys = mat_hstack(f, a, mat_neg(f, b));
    Mat ker = nullspace(f, sys);
    Mat xs(a.cols(), ker.cols(), f.zero());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < ker.cols(); ++j) xs.at(i, j) = ker.at(i, j);
    return rcef(f, mat_mul(f, a, xs));
}

Mat preimage(const FieldCtx& f, const Mat& m, const Mat& b) {
    // {x : m x in span(b)}: x-part of the kernel of [m | -b]
    Mat sys = mat_hstack(f, m, mat_neg(f, b));
    Mat ker = nullspace(f, sys);
    Mat xs(m.cols(), ker.cols(), f.zero());
    for (int i = 0; i < m.cols(); ++i)
        for (int j = 0; j < ker.cols(); ++j) xs.at(i, j) = ker.at(i, j);
    return rcef(f, xs);
}

Poly char_poly(const FieldCtx& f, const Mat& a) {
    if (a.rows() != a.cols()) fail(ErrorCode::ShapeMismatch, "char_poly of non-square matrix");
    int n = a.rows();
    if (n == 0) return poly_one(f);
    // Samuelson-Berkowitz: iteratively build coefficient vectors via the
    // Toeplitz products; division-free, so fine in any characteristic.
    std::vector<Scalar> v = {f.one(), f.neg(a.at(0, 0))}; // char poly of leading 1x1, descending
    for (int k = 1; k < n; ++k) {
        // principal (k+1)x(k+1) block: split into [ M  c ; r  d ]
        Mat M(k, k, f.zero());
        Mat c(k, 1, f.zero()), r(1, k, f.zero());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) M.at(i, j) = a.at(i, j);
        for (int i = 0; i < k; ++i) c.at(i, 0) = a.at(i, k);
        for (int j = 0; j < k; ++j) r.at(0, j) = a.at(k, j);
        Scalar d = a.at(k, k);
        // Toeplitz column: t0 = 1, t1 = -d, t_{i+2} = -(r M^i c)
        std::vector<Scalar> t = {f.one(), f.neg(d)};
        Mat mc = c;
        for (int i = 0; i <= k - 1; ++i) {
            Mat rm = mat_mul(f, r, mc);
            t.push_back(f.neg(rm.at(0, 0)));
            if (i + 1 <= k - 1) mc = mat_mul(f, M, mc);
        }
        std::vector<Scalar> nv(v.size() + 1, f.zero());
        for (size_t i = 0; i < nv.size(); ++i)
            for (size_t j = 0; j <= i && j < t.size(); ++j) {
                if (i - j < v.size()) nv[i] = f.add(nv[i], f.mul(t[j], v[i - j]));
            }
        v = std::move(nv);
    }
    // v holds coefficients in descending degree; convert to ascending
    std::vector<Scalar> asc(v.rbegin(), v.rend());
    return poly_from_coeffs(f, asc);
}

Mat poly_apply(const FieldCtx& f, const Poly& p, const Mat& a) {
    if (a.rows() != a.cols()) fail(ErrorCode::ShapeMismatch, "poly_apply on non-square matrix");
    int n = a.rows();
    Mat acc(n, n, f.zero());
    for (size_t i = p.c.size(); i-- > 0;) {
        acc = mat_mul(f, acc, a);
        for (int k = 0; k < n; ++k) acc.at(k, k) = f.add(acc.at(k, k), p.c[i]);
    }
    return acc;
}

Poly min_poly(const FieldCtx& f, const Mat& a) {
    if (a.rows() != a.cols()) fail(ErrorCode::ShapeMismatch, "min_poly of non-square matrix");
    int n = a.rows();
    if (n == 0) return poly_one(f);
    // find the first linear dependence among I, A, A^2, ... (flattened)
    std::vector<Mat> powers;
    Mat cur = Mat::identity(f, n);
    for (int d = 0; d <= n; ++d) {
        powers.push_back(cur);
        Mat sys(n * n, d + 1, f.zero());
        for (int k = 0; k <= d; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    sys.at(i * n + j, k) = powers[static_cast<size_t>(k)].at(i, j);
        Mat ker = nullspace(f, sys);
        if (ker.cols() > 0) {
            std::vector<Scalar> coeffs;
            for (int i = 0; i <= d; ++i) coeffs.push_back(ker.at(i, 0));
            return poly_monic(f, poly_from_coeffs(f, coeffs));
        }
        cur = mat_mul(f, cur, a);
    }
    fail(ErrorCode::Internal, "min_poly: no dependence found");
}

Mat companion_matrix(const FieldCtx& f, const Poly& p) {
    if (!poly_is_monic(f, p)) fail(ErrorCode::NotMonic, "companion matrix requires a monic polynomial");
    int d = p.degree();
    if (d < 1) fail(ErrorCode::NotMonic, "companion matrix requires degree >= 1");
    Mat m(d, d, f.zero());
    for (int i = 1; i < d; ++i) m.at(i, i - 1) = f.one();
    for (int i = 0; i < d; ++i) m.at(i, d - 1) = f.neg(p.c[static_cast<size_t>(i)]);
    return m;
}

Mat mat_sample(const FieldCtx& f, int rows, int cols, std::mt19937_64& rng) {
    Mat m(rows, cols, f.zero());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = f.sample(rng);
    return m;
}

std::string mat_to_string(const FieldCtx& f, const Mat& a) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < a.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < a.cols(); ++j) os << (j ? " " : "") << f.to_string(a.at(i, j));
    }
    os << "]";
    return os.str();
}

} // namespace lpa
