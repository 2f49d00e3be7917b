#include "lpa/moduli.hpp"

#include "lpa/chen.hpp"

#include <set>

namespace lpa {

long long expected_dim(const Graph& g, const DimVector& d) {
    if (static_cast<int>(d.size()) != g.num_vertices())
        fail(ErrorCode::ShapeMismatch, "dimension vector size does not match vertex count");
    long long total = 1;
    for (int e = 0; e < g.num_edges(); ++e)
        total += static_cast<long long>(d[static_cast<size_t>(g.src(e))]) *
                 d[static_cast<size_t>(g.dst(e))];
    for (int v = 0; v < g.num_vertices(); ++v)
        total -= static_cast<long long>(d[static_cast<size_t>(v)]) * d[static_cast<size_t>(v)];
    return total;
}

StabilizerReport stabilizer_check(const Rep& r) {
    validate_rep(r);
    const FieldCtx& f = r.field;
    const Graph& g = r.graph;
    // derivative of the base-change action at r:
    // (g_nu)_nu -> (g_re M_e - M_e g_se)_e on the product of gl(d_nu)
    std::vector<int> off(static_cast<size_t>(g.num_vertices()) + 1, 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        off[static_cast<size_t>(v) + 1] = off[static_cast<size_t>(v)] +
                                          r.dims[static_cast<size_t>(v)] * r.dims[static_cast<size_t>(v)];
    int unknowns = off.back();
    int rows = 0;
    for (int e = 0; e < g.num_edges(); ++e)
        rows += r.dims[static_cast<size_t>(g.dst(e))] * r.dims[static_cast<size_t>(g.src(e))];
    Mat sys(rows, unknowns, f.zero());
    int row = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        int s = g.src(e), t = g.dst(e);
        const Mat& M = r.mats[static_cast<size_t>(e)];
        int ds = r.dims[static_cast<size_t>(s)], dt = r.dims[static_cast<size_t>(t)];
        for (int i = 0; i < dt; ++i)
            for (int j = 0; j < ds; ++j) {
                for (int k = 0; k < dt; ++k) {
                    int col = off[static_cast<size_t>(t)] + i * dt + k;
                    sys.at(row, col) = f.add(sys.at(row, col), M.at(k, j));
                }
                for (int k = 0; k < ds; ++k) {
                    int col = off[static_cast<size_t>(s)] + k * ds + j;
                    sys.at(row, col) = f.sub(sys.at(row, col), M.at(i, k));
                }
                ++row;
            }
    }
    int k = nullspace(f, sys).cols();

    StabilizerReport rep;
    rep.commutant_dim = k;
    rep.end_dim = static_cast<int>(hom_space(r, r).size());
    if (rep.commutant_dim != rep.end_dim)
        fail(ErrorCode::Internal, "commutant dimension disagrees with the endomorphism space");
    long long edge_sum = 0, vertex_sq = 0;
    for (int e = 0; e < g.num_edges(); ++e)
        edge_sum += static_cast<long long>(r.dims[static_cast<size_t>(g.src(e))]) *
                    r.dims[static_cast<size_t>(g.dst(e))];
    for (int v = 0; v < g.num_vertices(); ++v)
        vertex_sq += static_cast<long long>(r.dims[static_cast<size_t>(v)]) *
                     r.dims[static_cast<size_t>(v)];
    rep.transverse_dim = edge_sum - (vertex_sq - k);
    rep.expected = expected_dim(g, r.dims);
    rep.schur = (k == 1);
    if (rep.schur && rep.transverse_dim != rep.expected)
        fail(ErrorCode::Internal, "Schur point transverse dimension disagrees with the formula");
    return rep;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > cap / base + 1) fail(ErrorCode::BudgetExceeded, "enumeration exceeds budget");
        out *= base;
    }
    if (out > cap) fail(ErrorCode::BudgetExceeded, "enumeration exceeds budget");
    return out;
}

Rep decode_rep(const ModuliProblem& p, std::uint64_t code) {
    std::uint64_t q = static_cast<std::uint64_t>(p.field.p());
    std::vector<Mat> mats;
    for (int e = 0; e < p.graph.num_edges(); ++e) {
        int rws = p.dims[static_cast<size_t>(p.graph.dst(e))];
        int cls = p.dims[static_cast<size_t>(p.graph.src(e))];
        Mat m(rws, cls, p.field.zero());
        for (int i = 0; i < rws; ++i)
            for (int j = 0; j < cls; ++j) {
                m.at(i, j) = p.field.from_int(static_cast<std::int64_t>(code % q));
                code /= q;
            }
        mats.push_back(m);
    }
    return make_rep(p.graph, p.field, p.dims, mats);
}

std::uint64_t encode_rep(const ModuliProblem& p, const Rep& r) {
    std::uint64_t q = static_cast<std::uint64_t>(p.field.p());
    std::uint64_t code = 0, mult = 1;
    for (int e = 0; e < p.graph.num_edges(); ++e) {
        const Mat& m = r.mats[static_cast<size_t>(e)];
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                code += mult * static_cast<std::uint64_t>(m.at(i, j).r);
                mult *= q;
            }
    }
    return code;
}

// all invertible matrices of a given size over F_q, enumeration order
std::vector<Mat> all_invertible(const FieldCtx& f, int n, std::uint64_t cap) {
    std::uint64_t q = static_cast<std::uint64_t>(f.p());
    std::uint64_t total = checked_pow(q, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n), cap);
    std::vector<Mat> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        Mat m(n, n, f.zero());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = f.from_int(static_cast<std::int64_t>(c % q));
                c /= q;
            }
        if (mat_invertible(f, m)) out.push_back(m);
    }
    return out;
}

} // namespace

OrbitReport enumerate_and_count(const ModuliProblem& p, std::uint64_t budget) {
    if (p.field.kind() != FieldKind::PrimeField)
        fail(ErrorCode::Unsupported, "orbit enumeration requires a finite field");
    if (static_cast<int>(p.dims.size()) != p.graph.num_vertices())
        fail(ErrorCode::ShapeMismatch, "dimension vector size does not match vertex count");
    std::uint64_t q = static_cast<std::uint64_t>(p.field.p());
    std::uint64_t entries = 0;
    for (int e = 0; e < p.graph.num_edges(); ++e)
        entries += static_cast<std::uint64_t>(p.dims[static_cast<size_t>(p.graph.src(e))]) *
                   static_cast<std::uint64_t>(p.dims[static_cast<size_t>(p.graph.dst(e))]);
    std::uint64_t total = checked_pow(q, entries, budget);

    // the base-change group, one list of invertibles per vertex
    std::vector<std::vector<Mat>> gls;
    std::uint64_t group_size = 1;
    for (int v = 0; v < p.graph.num_vertices(); ++v) {
        gls.push_back(all_invertible(p.field, p.dims[static_cast<size_t>(v)], budget));
        group_size *= gls.back().size();
        if (group_size > budget) fail(ErrorCode::BudgetExceeded, "base-change group exceeds budget");
    }

    OrbitReport report;
    report.total_reps = total;
    report.expected = expected_dim(p.graph, p.dims);

    std::vector<bool> seen(total, false);
    int D = dim_total(p.dims);
    for (std::uint64_t code = 0; code < total; ++code) {
        Rep r = decode_rep(p, code);
        bool irred = false;
        if (D > 0) {
            IrredResult res = irreducible_exhaustive(r, budget);
            irred = res.verdict == Verdict::Yes;
        }
        if (!irred) continue;
        ++report.irreducible_count;
        if (seen[code]) continue;
        // canonicalize the orbit by minimal enumeration index
        std::uint64_t min_code = code;
        std::vector<size_t> idx(static_cast<size_t>(p.graph.num_vertices()), 0);
        while (true) {
            std::vector<Mat> g;
            for (int v = 0; v < p.graph.num_vertices(); ++v)
                g.push_back(gls[static_cast<size_t>(v)][idx[static_cast<size_t>(v)]]);
            std::uint64_t image = encode_rep(p, base_change(r, g));
            seen[image] = true;
            min_code = std::min(min_code, image);
            size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < gls[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
        ++report.class_count;
        Rep canon = decode_rep(p, min_code);
        bool nonzero = false;
        for (const Mat& m : canon.mats)
            if (!mat_is_zero(p.field, m)) nonzero = true;
        if (nonzero) ++report.nonzero_class_count;
        report.representatives.push_back(canon);
    }
    return report;
}

std::uint64_t count_irreducible_monic(const FieldCtx& f, int degree) {
    if (f.kind() != FieldKind::PrimeField)
        fail(ErrorCode::Unsupported, "polynomial census requires a finite field");
    if (degree < 1) fail(ErrorCode::ParseError, "degree must be positive");
    std::uint64_t q = static_cast<std::uint64_t>(f.p());
    std::uint64_t total = checked_pow(q, static_cast<std::uint64_t>(degree), 1ull << 26);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        std::vector<Scalar> coeffs;
        for (int i = 0; i < degree; ++i) {
            coeffs.push_back(f.from_int(static_cast<std::int64_t>(c % q)));
            c /= q;
        }
        coeffs.push_back(f.one());
        if (poly_is_irreducible(f, poly_from_coeffs(f, coeffs))) ++count;
    }
    return count;
}

ChenSubvarietyReport chen_subvariety_report(int n, int d, const FieldCtx& field) {
    if (field.kind() != FieldKind::PrimeField)
        fail(ErrorCode::Unsupported, "the census is over a finite field");
    if (n < 2 || d < 1) fail(ErrorCode::ParseError, "require n >= 2 and d >= 1");
    ChenSubvarietyReport rep;
    rep.n = n;
    rep.d = d;
    std::uint64_t q = static_cast<std::uint64_t>(field.p());
    rep.lambda_family = count_prime_classes(n, d) * (q - 1);
    rep.total = rep.lambda_family;
    for (int a = 1; a <= d; ++a) {
        if (d % a != 0) continue;
        int b = d / a;
        if (b < 2) continue;
        ChenFamilyCount fam;
        fam.cycle_len = a;
        fam.poly_deg = b;
        fam.count = count_prime_classes(n, a) * count_irreducible_monic(field, b);
        rep.total += fam.count;
        rep.twisted_families.push_back(fam);
    }
    long long ed = expected_dim(Graph::bouquet(n), DimVector{d});
    mpz_class ambient;
    mpz_ui_pow_ui(ambient.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(ed < 0 ? 0 : ed));
    rep.ambient = ambient;
    rep.note = "family data occupies at most d coefficients of the (n-1)d^2+1 ambient parameters";
    return rep;
}

} // namespace lpa
