#include "lpa/classify.hpp"

#include <algorithm>
#include <set>

namespace lpa {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

Mat hom_global(const Rep& r, const RepHom& h) {
    Mat g(0, 0);
    for (const Mat& b : h.blocks) g = mat_block_diag(r.field, g, b);
    return g;
}

std::vector<Mat> family_from_global(const Rep& r, const Mat& vec) {
    std::vector<int> off = vertex_offsets(r);
    std::vector<Mat> fam;
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        int d = r.dims[static_cast<size_t>(v)];
        Mat m(d, vec.cols(), r.field.zero());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < vec.cols(); ++j)
                m.at(i, j) = vec.at(off[static_cast<size_t>(v)] + i, j);
        fam.push_back(m);
    }
    return fam;
}

bool subspace_proper_nonzero(const Rep& r, const Subspace& s) {
    int t = dim_total(subspace_dims(s));
    return t > 0 && t < r.total_dim();
}

RepHom hom_combination(const Rep& v, const Rep& w, const std::vector<RepHom>& basis,
                       const std::vector<Scalar>& coeffs) {
    RepHom h;
    for (int nu = 0; nu < v.graph.num_vertices(); ++nu) {
        Mat b(w.dims[static_cast<size_t>(nu)], v.dims[static_cast<size_t>(nu)], v.field.zero());
        for (size_t i = 0; i < basis.size(); ++i)
            b = mat_add(v.field, b, mat_scale(v.field, coeffs[i], basis[i].blocks[static_cast<size_t>(nu)]));
        h.blocks.push_back(b);
    }
    return h;
}

} // namespace

IsoResult is_isomorphic(const Rep& v, const Rep& w, std::uint64_t seed, std::uint64_t budget) {
    (void)seed; // the decision procedure is deterministic; seed echoed by the CLI
    require_compatible(v, w);
    validate_rep(v);
    validate_rep(w);
    if (v.dims != w.dims)
        return {Verdict::No, std::nullopt, "dimension vectors differ"};
    if (v.total_dim() == 0) {
        return {Verdict::Yes, RepHom{std::vector<Mat>(v.dims.size(), Mat(0, 0))}, "zero representations"};
    }
    std::vector<RepHom> basis = hom_space(v, w);
    size_t k = basis.size();
    if (k == 0) return {Verdict::No, std::nullopt, "hom space is zero"};

    const FieldCtx& f = v.field;
    // grid of coordinate tuples: all residues over F_p, 0..D over Q
    std::uint64_t side =
        f.kind() == FieldKind::PrimeField ? static_cast<std::uint64_t>(f.p())
                                          : static_cast<std::uint64_t>(v.total_dim()) + 1;
    std::uint64_t count = 1;
    for (size_t i = 0; i < k; ++i) {
        if (count > budget / side + 1) {
            return {Verdict::Unknown, std::nullopt, "certification grid exceeds budget"};
        }
        count *= side;
    }
    if (count > budget)
        return {Verdict::Unknown, std::nullopt, "certification grid exceeds budget"};

    std::vector<std::uint64_t> idx(k, 0);
    while (true) {
        std::vector<Scalar> coeffs;
        for (size_t i = 0; i < k; ++i) coeffs.push_back(f.from_int(static_cast<std::int64_t>(idx[i])));
        RepHom h = hom_combination(v, w, basis, coeffs);
        bool inv = true;
        for (const Mat& b : h.blocks)
            if (!mat_invertible(f, b)) {
                inv = false;
                break;
            }
        if (inv) return {Verdict::Yes, h, "invertible morphism found"};
        size_t pos = 0;
        while (pos < k) {
            if (++idx[pos] < side) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    // Over F_p every morphism was exhausted. Over Q the per-vertex determinant
    // product, of per-variable degree <= total dim, vanishes on a full
    // (D+1)^k grid and hence identically.
    return {Verdict::No, std::nullopt, "no invertible morphism exists (grid exhausted)"};
}

// ---------------------------------------------------------------------------
// irreducibility

namespace {

std::vector<Path> operator_paths(const Graph& g, int max_len) {
    std::set<Path> seen;
    std::vector<Path> out;
    for (int k = 0; k <= max_len; ++k)
        for (const Path& p : paths_E(g, k))
            if (seen.insert(p).second) out.push_back(p);
    return out;
}

Mat random_algebra_element(const Rep& r, const std::vector<Path>& paths, std::mt19937_64& rng) {
    int D = r.total_dim();
    Mat t(D, D, r.field.zero());
    for (const Path& p : paths) {
        Scalar c = r.field.sample(rng);
        if (r.field.is_zero(c)) continue;
        t = mat_add(r.field, t, mat_scale(r.field, c, path_operator(r, p)));
    }
    return t;
}

// Spin a global vector; No-witness when the closure is proper and nonzero.
std::optional<Subspace> spin_proper(const Rep& r, const Mat& vec) {
    Subspace c = submodule_closure(r, family_from_global(r, vec));
    if (subspace_proper_nonzero(r, c)) return c;
    return std::nullopt;
}

struct CertifyOutcome {
    bool decided = false;
    IrredResult result;
};

// Kernel-seeded two-sided test: for an algebra element T and an irreducible
// factor f of its characteristic polynomial of multiplicity one, every
// submodule meets ker f(T) or its annihilator meets ker f(T^t); when both
// kernels spin to everything the module is irreducible.
CertifyOutcome certify_with_element(const Rep& r, const Rep& op, const Mat& T) {
    CertifyOutcome out;
    const FieldCtx& f = r.field;
    Poly cp = char_poly(f, T);
    std::vector<PolyFactor> factors;
    try {
        factors = poly_factor(f, cp);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Unsupported) return out; // degree cap over Q
        throw;
    }
    for (const auto& [fac, mult] : factors) {
        Mat N = poly_apply(f, fac, T);
        Mat K = nullspace(f, N);
        for (int c = 0; c < K.cols(); ++c) {
            if (auto w = spin_proper(r, mat_col(K, c))) {
                out.decided = true;
                out.result = {Verdict::No, *w, "kernel vector spans a proper submodule"};
                return out;
            }
        }
        if (mult != 1) continue;
        Mat Kt = nullspace(f, mat_transpose(N));
        if (Kt.cols() == 0) continue;
        Subspace dual = submodule_closure(op, family_from_global(op, mat_col(Kt, 0)));
        if (subspace_proper_nonzero(op, dual)) {
            Subspace ann = subspace_annihilator(r, dual);
            if (is_submodule(r, ann) && subspace_proper_nonzero(r, ann)) {
                out.decided = true;
                out.result = {Verdict::No, ann, "annihilator of a proper dual submodule"};
                return out;
            }
            fail(ErrorCode::Internal, "annihilator of a dual submodule must be a proper submodule");
        }
        // K spins to everything, the dual kernel vector spins to everything,
        // and f has multiplicity one: certified irreducible.
        out.decided = true;
        out.result = {Verdict::Yes, std::nullopt, "two-sided kernel criterion"};
        return out;
    }
    return out;
}

} // namespace

IrredResult irreducible_exhaustive(const Rep& r, std::uint64_t budget) {
    validate_rep(r);
    if (r.field.kind() != FieldKind::PrimeField)
        fail(ErrorCode::Unsupported, "exhaustive irreducibility scan requires a prime field");
    int D = r.total_dim();
    if (D == 0) fail(ErrorCode::ZeroRep, "irreducibility of the zero representation");
    std::uint64_t q = static_cast<std::uint64_t>(r.field.p());
    std::uint64_t count = 1;
    for (int i = 0; i < D; ++i) {
        if (count > budget / q + 1) fail(ErrorCode::BudgetExceeded, "q^dim exceeds budget");
        count *= q;
    }
    if (count > budget) fail(ErrorCode::BudgetExceeded, "q^dim exceeds budget");

    std::vector<std::int64_t> digits(static_cast<size_t>(D), 0);
    for (std::uint64_t code = 1; code < count; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < D; ++i) {
            digits[static_cast<size_t>(i)] = static_cast<std::int64_t>(c % q);
            c /= q;
        }
        // projective normalization: leading nonzero digit equals 1
        int lead = -1;
        for (int i = 0; i < D; ++i)
            if (digits[static_cast<size_t>(i)] != 0) {
                lead = i;
                break;
            }
        if (lead < 0 || digits[static_cast<size_t>(lead)] != 1) continue;
        Mat vec(D, 1, r.field.zero());
        for (int i = 0; i < D; ++i) vec.at(i, 0) = r.field.from_int(digits[static_cast<size_t>(i)]);
        if (auto w = spin_proper(r, vec))
            return {Verdict::No, *w, "exhaustive scan found a proper submodule"};
    }
    return {Verdict::Yes, std::nullopt, "every nonzero vector spins to the whole module"};
}

IrredResult is_irreducible(const Rep& r, std::uint64_t seed, std::uint64_t budget) {
    validate_rep(r);
    int D = r.total_dim();
    if (D == 0) fail(ErrorCode::ZeroRep, "irreducibility of the zero representation");
    if (D == 1) return {Verdict::Yes, std::nullopt, "one-dimensional"};

    const FieldCtx& f = r.field;
    std::vector<int> off = vertex_offsets(r);

    // standard basis vectors first: cheap No-witnesses
    for (int v = 0; v < r.graph.num_vertices(); ++v)
        for (int i = 0; i < r.dims[static_cast<size_t>(v)]; ++i) {
            Mat vec(D, 1, f.zero());
            vec.at(off[static_cast<size_t>(v)] + i, 0) = f.one();
            if (auto w = spin_proper(r, vec))
                return {Verdict::No, *w, "a coordinate vector spans a proper submodule"};
        }

    std::mt19937_64 rng(seed);
    for (int it = 0; it < 8; ++it) {
        Mat vec = mat_sample(f, D, 1, rng);
        if (mat_is_zero(f, vec)) continue;
        if (auto w = spin_proper(r, vec))
            return {Verdict::No, *w, "a sampled vector spans a proper submodule"};
    }

    Rep op = opposite_rep(r);
    std::vector<Path> paths = operator_paths(r.graph, 3);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Mat T = random_algebra_element(r, paths, rng);
        if (mat_is_zero(f, T)) continue;
        CertifyOutcome out = certify_with_element(r, op, T);
        if (out.decided) return out.result;
    }

    if (f.kind() == FieldKind::PrimeField) {
        bool fits = true;
        std::uint64_t q = static_cast<std::uint64_t>(f.p());
        std::uint64_t count = 1;
        for (int i = 0; i < D; ++i) {
            if (count > budget / q + 1) {
                fits = false;
                break;
            }
            count *= q;
        }
        if (fits && count <= budget) return irreducible_exhaustive(r, budget);
    }
    return {Verdict::Unknown, std::nullopt, "no certificate found within budget"};
}

// ---------------------------------------------------------------------------
// indecomposability

namespace {

// kernels of h-polynomials are submodules since h is an endomorphism
Subspace poly_kernel_subspace(const Rep& r, const RepHom& h, const Poly& p) {
    std::vector<Mat> fam;
    for (const Mat& b : h.blocks) fam.push_back(nullspace(r.field, poly_apply(r.field, p, b)));
    return subspace_canonical(r, fam);
}

std::optional<std::pair<Subspace, Subspace>> fitting_split(const Rep& r, const RepHom& h) {
    const FieldCtx& f = r.field;
    Poly cp = poly_one(f);
    for (const Mat& b : h.blocks) cp = poly_mul(f, cp, char_poly(f, b));
    std::vector<PolyFactor> factors;
    try {
        factors = poly_factor(f, cp);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Unsupported) return std::nullopt;
        throw;
    }
    if (factors.size() < 2) return std::nullopt;
    Poly first = poly_one(f), rest = poly_one(f);
    for (size_t i = 0; i < factors.size(); ++i) {
        Poly pw = poly_one(f);
        for (int m = 0; m < factors[i].multiplicity; ++m) pw = poly_mul(f, pw, factors[i].factor);
        if (i == 0)
            first = pw;
        else
            rest = poly_mul(f, rest, pw);
    }
    Subspace u1 = poly_kernel_subspace(r, h, first);
    Subspace u2 = poly_kernel_subspace(r, h, rest);
    if (dim_total(subspace_dims(u1)) == 0 || dim_total(subspace_dims(u2)) == 0) return std::nullopt;
    if (dim_total(subspace_dims(u1)) + dim_total(subspace_dims(u2)) != r.total_dim())
        fail(ErrorCode::Internal, "coprime kernels do not decompose the module");
    return std::make_pair(u1, u2);
}

std::optional<std::pair<Subspace, Subspace>> idempotent_split(const Rep& r, const RepHom& h) {
    const FieldCtx& f = r.field;
    // h must be idempotent, not 0, not id
    bool zero = true, ident = true;
    for (size_t v = 0; v < h.blocks.size(); ++v) {
        const Mat& b = h.blocks[v];
        if (!mat_eq(f, mat_mul(f, b, b), b)) return std::nullopt;
        if (!mat_is_zero(f, b)) zero = false;
        if (!mat_eq(f, b, Mat::identity(f, b.rows()))) ident = false;
    }
    if (zero || ident) return std::nullopt;
    std::vector<Mat> im_fam, ker_fam;
    for (const Mat& b : h.blocks) {
        im_fam.push_back(rcef(f, b));
        ker_fam.push_back(nullspace(f, b));
    }
    Subspace im = subspace_canonical(r, im_fam);
    Subspace ker = subspace_canonical(r, ker_fam);
    if (dim_total(subspace_dims(im)) == 0 || dim_total(subspace_dims(ker)) == 0) return std::nullopt;
    return std::make_pair(im, ker);
}

// coordinates of a hom in a given hom basis (columns of the flattening)
struct EndCoords {
    Mat flat;                 // (sum of block sizes) x k
    std::vector<RepHom> basis;

    std::vector<Scalar> express(const Rep& r, const RepHom& h) const {
        Mat v(flat.rows(), 1, r.field.zero());
        int at = 0;
        for (const Mat& b : h.blocks)
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j) v.at(at++, 0) = b.at(i, j);
        Mat x = solve_in_col_space(r.field, flat, v);
        std::vector<Scalar> out;
        for (int i = 0; i < x.rows(); ++i) out.push_back(x.at(i, 0));
        return out;
    }
};

EndCoords end_coords(const Rep& r, const std::vector<RepHom>& basis) {
    int rows = 0;
    for (int d : r.dims) rows += d * d;
    Mat flat(rows, static_cast<int>(basis.size()), r.field.zero());
    for (size_t c = 0; c < basis.size(); ++c) {
        int at = 0;
        for (const Mat& b : basis[c].blocks)
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j) flat.at(at++, static_cast<int>(c)) = b.at(i, j);
    }
    return EndCoords{flat, basis};
}

RepHom end_mul(const Rep& r, const RepHom& a, const RepHom& b) {
    RepHom h;
    for (size_t v = 0; v < a.blocks.size(); ++v)
        h.blocks.push_back(mat_mul(r.field, a.blocks[v], b.blocks[v]));
    return h;
}

RepHom end_lincomb(const Rep& r, const std::vector<RepHom>& basis, const std::vector<Scalar>& c) {
    RepHom h;
    for (int nu = 0; nu < r.graph.num_vertices(); ++nu) {
        Mat b(r.dims[static_cast<size_t>(nu)], r.dims[static_cast<size_t>(nu)], r.field.zero());
        for (size_t i = 0; i < basis.size(); ++i)
            b = mat_add(r.field, b, mat_scale(r.field, c[i], basis[i].blocks[static_cast<size_t>(nu)]));
        h.blocks.push_back(b);
    }
    return h;
}

Scalar end_trace(const Rep& r, const RepHom& h) {
    Scalar t = r.field.zero();
    for (const Mat& b : h.blocks)
        for (int i = 0; i < b.rows(); ++i) t = r.field.add(t, b.at(i, i));
    return t;
}

// Newton lifting of an idempotent modulo the (nilpotent) radical:
// e <- 3e^2 - 2e^3 doubles the precision each step.
std::optional<RepHom> lift_idempotent(const Rep& r, RepHom e, int max_iter = 64) {
    const FieldCtx& f = r.field;
    for (int it = 0; it < max_iter; ++it) {
        bool idem = true;
        for (size_t v = 0; v < e.blocks.size(); ++v)
            if (!mat_eq(f, mat_mul(f, e.blocks[v], e.blocks[v]), e.blocks[v])) {
                idem = false;
                break;
            }
        if (idem) return e;
        RepHom e2 = end_mul(r, e, e);
        RepHom e3 = end_mul(r, e2, e);
        RepHom next;
        for (size_t v = 0; v < e.blocks.size(); ++v) {
            Mat m = mat_sub(f, mat_scale(f, f.from_int(3), e2.blocks[v]),
                            mat_scale(f, f.from_int(2), e3.blocks[v]));
            next.blocks.push_back(m);
        }
        e = next;
    }
    return std::nullopt;
}

} // namespace

IndecResult is_indecomposable(const Rep& r, std::uint64_t seed, std::uint64_t budget) {
    validate_rep(r);
    int D = r.total_dim();
    if (D == 0) fail(ErrorCode::ZeroRep, "indecomposability of the zero representation");

    const FieldCtx& f = r.field;
    std::vector<RepHom> basis = hom_space(r, r);
    size_t k = basis.size();
    if (k == 1) return {Verdict::Yes, std::nullopt, "endomorphisms are scalars"};

    std::mt19937_64 rng(seed);

    // Fitting: a coprime characteristic-polynomial split of any endomorphism
    // decomposes the module into complementary generalized kernels.
    std::vector<RepHom> candidates = basis;
    for (int it = 0; it < 12; ++it) {
        std::vector<Scalar> c;
        for (size_t i = 0; i < k; ++i) c.push_back(f.sample(rng));
        candidates.push_back(end_lincomb(r, basis, c));
    }
    for (const RepHom& h : candidates) {
        if (auto split = fitting_split(r, h))
            return {Verdict::No, split, "coprime characteristic split of an endomorphism"};
        if (auto split = idempotent_split(r, h))
            return {Verdict::No, split, "idempotent endomorphism"};
    }

    if (f.kind() == FieldKind::PrimeField) {
        // exhaustive idempotent scan: complete whenever |End| fits the budget
        std::uint64_t q = static_cast<std::uint64_t>(f.p());
        std::uint64_t cap = std::min<std::uint64_t>(budget, 1u << 16);
        std::uint64_t count = 1;
        bool fits = true;
        for (size_t i = 0; i < k; ++i) {
            if (count > cap / q + 1) {
                fits = false;
                break;
            }
            count *= q;
        }
        if (fits && count <= cap) {
            std::vector<std::uint64_t> idx(k, 0);
            for (std::uint64_t code = 1; code < count; ++code) {
                size_t pos = 0;
                while (pos < k) {
                    if (++idx[pos] < q) break;
                    idx[pos] = 0;
                    ++pos;
                }
                std::vector<Scalar> c;
                for (size_t i = 0; i < k; ++i)
                    c.push_back(f.from_int(static_cast<std::int64_t>(idx[i])));
                RepHom h = end_lincomb(r, basis, c);
                if (auto split = idempotent_split(r, h))
                    return {Verdict::No, split, "exhaustive idempotent scan"};
            }
            return {Verdict::Yes, std::nullopt,
                    "no nontrivial idempotent endomorphism (exhaustive)"};
        }
        return {Verdict::Unknown, std::nullopt, "endomorphism algebra exceeds budget"};
    }

    // Over Q: radical of End via the trace form (characteristic zero), then
    // examine the semisimple quotient S = End/rad.
    Mat form(static_cast<int>(k), static_cast<int>(k), f.zero());
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            form.at(static_cast<int>(i), static_cast<int>(j)) =
                end_trace(r, end_mul(r, basis[i], basis[j]));
    Mat rad = nullspace(f, form); // coordinates of a radical basis
    int s_dim = static_cast<int>(k) - rad.cols();

    if (s_dim == 1)
        return {Verdict::Yes, std::nullopt, "local endomorphism algebra (radical of codimension one)"};

    // reduction mod the radical: coordinates in End, then quotient by rad
    EndCoords coords = end_coords(r, basis);
    // complement of rad inside k-space: rows not pivotal in rad's rref
    Mat radT = mat_transpose(rad);
    std::vector<int> piv = rref(f, radT);
    std::vector<bool> pivotal(k, false);
    for (int p : piv) pivotal[static_cast<size_t>(p)] = true;

    auto reduce_mod_rad = [&](const std::vector<Scalar>& c) {
        // subtract the radical component: solve for the rad coordinates
        if (rad.cols() == 0) return c;
        std::vector<Scalar> out = c;
        // eliminate pivotal coordinates using rref(radT) rows
        for (size_t row = 0; row < piv.size(); ++row) {
            Scalar lead = out[static_cast<size_t>(piv[row])];
            if (f.is_zero(lead)) continue;
            for (size_t j = 0; j < k; ++j)
                out[j] = f.sub(out[j], f.mul(lead, radT.at(static_cast<int>(row), static_cast<int>(j))));
        }
        return out;
    };

    std::vector<RepHom> s_candidates;
    for (size_t i = 0; i < k; ++i)
        if (!pivotal[i]) s_candidates.push_back(basis[i]);
    for (int it = 0; it < 12; ++it) {
        std::vector<Scalar> c;
        for (size_t i = 0; i < k; ++i) c.push_back(f.sample(rng));
        s_candidates.push_back(end_lincomb(r, basis, c));
    }

    for (const RepHom& z : s_candidates) {
        // minimal polynomial of z in S: first dependence among reduced powers
        std::vector<std::vector<Scalar>> pow_coords;
        RepHom power = hom_identity(r);
        bool abort = false;
        for (int d = 0; d <= s_dim; ++d) {
            pow_coords.push_back(reduce_mod_rad(coords.express(r, power)));
            Mat sys(static_cast<int>(k), d + 1, f.zero());
            for (int col = 0; col <= d; ++col)
                for (size_t row = 0; row < k; ++row)
                    sys.at(static_cast<int>(row), col) = pow_coords[static_cast<size_t>(col)][row];
            Mat kerm = nullspace(f, sys);
            if (kerm.cols() > 0) {
                std::vector<Scalar> mc;
                for (int i = 0; i <= d; ++i) mc.push_back(kerm.at(i, 0));
                Poly minp = poly_monic(f, poly_from_coeffs(f, mc));
                std::vector<PolyFactor> factors;
                try {
                    factors = poly_factor(f, minp);
                } catch (const Error& e) {
                    if (e.code() == ErrorCode::Unsupported) {
                        abort = true;
                        break;
                    }
                    throw;
                }
                if (factors.size() >= 2) {
                    // CRT idempotent: u ≡ 1 mod f1^m1, 0 mod the rest
                    Poly first = poly_one(f), rest = poly_one(f);
                    for (size_t i = 0; i < factors.size(); ++i) {
                        Poly pw = poly_one(f);
                        for (int m = 0; m < factors[i].multiplicity; ++m)
                            pw = poly_mul(f, pw, factors[i].factor);
                        if (i == 0)
                            first = pw;
                        else
                            rest = poly_mul(f, rest, pw);
                    }
                    // extended euclid: a*first + b*rest = 1
                    Poly r0 = first, r1 = rest;
                    Poly s0 = poly_one(f), s1 = poly_zero();
                    Poly t0 = poly_zero(), t1 = poly_one(f);
                    while (!r1.is_zero()) {
                        Poly q, rr;
                        poly_divmod(f, r0, r1, q, rr);
                        Poly s2 = poly_sub(f, s0, poly_mul(f, q, s1));
                        Poly t2 = poly_sub(f, t0, poly_mul(f, q, t1));
                        r0 = r1; r1 = rr;
                        s0 = s1; s1 = s2;
                        t0 = t1; t1 = t2;
                    }
                    Scalar lead_inv = f.inv(r0.c.back());
                    Poly b_coef = poly_scale(f, lead_inv, t0);
                    Poly u = poly_mul(f, b_coef, rest); // u = 1 - a*first
                    // evaluate u at z inside End, then lift to an exact idempotent
                    RepHom e;
                    for (int nu = 0; nu < r.graph.num_vertices(); ++nu)
                        e.blocks.push_back(poly_apply(f, u, z.blocks[static_cast<size_t>(nu)]));
                    if (auto lifted = lift_idempotent(r, e))
                        if (auto split = idempotent_split(r, *lifted))
                            return {Verdict::No, split, "idempotent lifted from the semisimple quotient"};
                } else if (factors.size() == 1 && factors[0].multiplicity == 1 &&
                           factors[0].factor.degree() == s_dim) {
                    // S = Q[z] is a field: End is local
                    return {Verdict::Yes, std::nullopt,
                            "semisimple quotient of End is a field generated by one element"};
                }
                break;
            }
            power = end_mul(r, power, z);
        }
        if (abort) break;
    }
    return {Verdict::Unknown, std::nullopt, "endomorphism algebra structure not certified"};
}

} // namespace lpa
