#include "lpa/rep.hpp"

#include <algorithm>
#include <sstream>

namespace lpa {

int dim_total(const DimVector& d) {
    int t = 0;
    for (int x : d) t += x;
    return t;
}

Rep make_rep(Graph g, FieldCtx f, DimVector dims, std::vector<Mat> mats) {
    Rep r{std::move(g), f, std::move(dims), std::move(mats)};
    validate_rep(r);
    return r;
}

void validate_rep(const Rep& r) {
    if (static_cast<int>(r.dims.size()) != r.graph.num_vertices())
        fail(ErrorCode::ShapeMismatch, "dims size does not match vertex count");
    if (static_cast<int>(r.mats.size()) != r.graph.num_edges())
        fail(ErrorCode::ShapeMismatch, "matrix count does not match edge count");
    for (int v = 0; v < r.graph.num_vertices(); ++v)
        if (r.dims[static_cast<size_t>(v)] < 0)
            fail(ErrorCode::ShapeMismatch, "negative dimension at vertex " + r.graph.vertex_name(v));
    for (int e = 0; e < r.graph.num_edges(); ++e) {
        const Mat& m = r.mats[static_cast<size_t>(e)];
        int want_r = r.dims[static_cast<size_t>(r.graph.dst(e))];
        int want_c = r.dims[static_cast<size_t>(r.graph.src(e))];
        if (m.rows() != want_r || m.cols() != want_c)
            fail(ErrorCode::ShapeMismatch,
                 "edge '" + r.graph.edge_name(e) + "': expected " + std::to_string(want_r) + "x" +
                     std::to_string(want_c) + ", found " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
    }
}

bool rep_eq(const Rep& a, const Rep& b) {
    if (!(a.graph == b.graph) || a.field != b.field || a.dims != b.dims) return false;
    for (size_t e = 0; e < a.mats.size(); ++e)
        if (!mat_eq(a.field, a.mats[e], b.mats[e])) return false;
    return true;
}

void require_compatible(const Rep& a, const Rep& b) {
    if (!(a.graph == b.graph)) fail(ErrorCode::GraphMismatch, "representations on different graphs");
    if (a.field != b.field) fail(ErrorCode::FieldMismatch, "representations over different fields");
}

// ---------------------------------------------------------------------------
// subspace families

Subspace subspace_zero(const Rep& r) {
    Subspace s;
    for (int d : r.dims) s.basis.push_back(Mat(d, 0));
    return s;
}

Subspace subspace_full(const Rep& r) {
    Subspace s;
    for (int d : r.dims) s.basis.push_back(Mat::identity(r.field, d));
    return s;
}

Subspace subspace_canonical(const Rep& r, std::vector<Mat> family) {
    if (static_cast<int>(family.size()) != r.graph.num_vertices())
        fail(ErrorCode::ShapeMismatch, "subspace family size does not match vertex count");
    Subspace s;
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        if (family[static_cast<size_t>(v)].rows() != r.dims[static_cast<size_t>(v)])
            fail(ErrorCode::ShapeMismatch, "subspace component has wrong ambient dimension");
        s.basis.push_back(rcef(r.field, family[static_cast<size_t>(v)]));
    }
    return s;
}

DimVector subspace_dims(const Subspace& s) {
    DimVector d;
    for (const Mat& m : s.basis) d.push_back(m.cols());
    return d;
}

bool subspace_eq(const FieldCtx& f, const Subspace& a, const Subspace& b) {
    if (a.basis.size() != b.basis.size()) return false;
    for (size_t v = 0; v < a.basis.size(); ++v)
        if (!mat_eq(f, a.basis[v], b.basis[v])) return false;
    return true;
}

bool subspace_leq(const FieldCtx& f, const Subspace& a, const Subspace& b) {
    if (a.basis.size() != b.basis.size()) return false;
    for (size_t v = 0; v < a.basis.size(); ++v)
        if (!col_space_contains(f, b.basis[v], a.basis[v])) return false;
    return true;
}

Subspace subspace_sum(const Rep& r, const Subspace& a, const Subspace& b) {
    std::vector<Mat> fam;
    for (size_t v = 0; v < a.basis.size(); ++v)
        fam.push_back(span_sum(r.field, a.basis[v], b.basis[v]));
    return subspace_canonical(r, fam);
}

Subspace subspace_intersect(const Rep& r, const Subspace& a, const Subspace& b) {
    std::vector<Mat> fam;
    for (size_t v = 0; v < a.basis.size(); ++v)
        fam.push_back(span_intersect(r.field, a.basis[v], b.basis[v]));
    return subspace_canonical(r, fam);
}

// ---------------------------------------------------------------------------
// homs

RepHom hom_identity(const Rep& r) {
    RepHom h;
    for (int d : r.dims) h.blocks.push_back(Mat::identity(r.field, d));
    return h;
}

bool hom_is_equivariant(const Rep& v, const Rep& w, const RepHom& h) {
    for (int e = 0; e < v.graph.num_edges(); ++e) {
        const Mat& lhs = mat_mul(v.field, h.blocks[static_cast<size_t>(v.graph.dst(e))],
                                 v.mats[static_cast<size_t>(e)]);
        const Mat& rhs = mat_mul(v.field, w.mats[static_cast<size_t>(e)],
                                 h.blocks[static_cast<size_t>(v.graph.src(e))]);
        if (!mat_eq(v.field, lhs, rhs)) return false;
    }
    return true;
}

bool hom_is_invertible(const Rep& v, const Rep& w, const RepHom& h) {
    (void)w;
    for (const Mat& b : h.blocks)
        if (!mat_invertible(v.field, b)) return false;
    return true;
}

RepHom hom_compose(const Rep& u, const Rep& v, const Rep& w, const RepHom& f, const RepHom& g) {
    (void)v;
    (void)w;
    RepHom h;
    for (size_t i = 0; i < f.blocks.size(); ++i)
        h.blocks.push_back(mat_mul(u.field, g.blocks[i], f.blocks[i]));
    return h;
}

Subspace hom_image(const Rep& v, const Rep& w, const RepHom& h) {
    (void)v;
    std::vector<Mat> fam;
    for (const Mat& b : h.blocks) fam.push_back(b);
    return subspace_canonical(w, fam);
}

Subspace hom_image_of(const Rep& v, const Rep& w, const RepHom& h, const Subspace& s) {
    (void)v;
    std::vector<Mat> fam;
    for (size_t i = 0; i < h.blocks.size(); ++i)
        fam.push_back(mat_mul(w.field, h.blocks[i], s.basis[i]));
    return subspace_canonical(w, fam);
}

Subspace hom_preimage_of(const Rep& v, const Rep& w, const RepHom& h, const Subspace& s) {
    (void)w;
    std::vector<Mat> fam;
    for (size_t i = 0; i < h.blocks.size(); ++i)
        fam.push_back(preimage(v.field, h.blocks[i], s.basis[i]));
    return subspace_canonical(v, fam);
}

std::vector<RepHom> hom_space(const Rep& v, const Rep& w) {
    require_compatible(v, w);
    const FieldCtx& f = v.field;
    const Graph& g = v.graph;
    // unknowns: entries of blocks[nu], vertex by vertex, row-major
    std::vector<int> offset(static_cast<size_t>(g.num_vertices()) + 1, 0);
    for (int nu = 0; nu < g.num_vertices(); ++nu)
        offset[static_cast<size_t>(nu) + 1] =
            offset[static_cast<size_t>(nu)] + w.dims[static_cast<size_t>(nu)] * v.dims[static_cast<size_t>(nu)];
    int unknowns = offset.back();

    int rows = 0;
    for (int e = 0; e < g.num_edges(); ++e)
        rows += w.dims[static_cast<size_t>(g.dst(e))] * v.dims[static_cast<size_t>(g.src(e))];

    Mat sys(rows, unknowns, f.zero());
    int row = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        int s = g.src(e), t = g.dst(e);
        const Mat& Mv = v.mats[static_cast<size_t>(e)];
        const Mat& Mw = w.mats[static_cast<size_t>(e)];
        for (int i = 0; i < w.dims[static_cast<size_t>(t)]; ++i)
            for (int j = 0; j < v.dims[static_cast<size_t>(s)]; ++j) {
                // sum_k blocks[t][i,k] Mv[k,j] - sum_k Mw[i,k] blocks[s][k,j] = 0
                for (int k = 0; k < v.dims[static_cast<size_t>(t)]; ++k) {
                    int col = offset[static_cast<size_t>(t)] + i * v.dims[static_cast<size_t>(t)] + k;
                    sys.at(row, col) = f.add(sys.at(row, col), Mv.at(k, j));
                }
                for (int k = 0; k < w.dims[static_cast<size_t>(s)]; ++k) {
                    int col = offset[static_cast<size_t>(s)] + k * v.dims[static_cast<size_t>(s)] + j;
                    sys.at(row, col) = f.sub(sys.at(row, col), Mw.at(i, k));
                }
                ++row;
            }
    }
    Mat ker = nullspace(f, sys);
    std::vector<RepHom> out;
    for (int c = 0; c < ker.cols(); ++c) {
        RepHom h;
        for (int nu = 0; nu < g.num_vertices(); ++nu) {
            Mat b(w.dims[static_cast<size_t>(nu)], v.dims[static_cast<size_t>(nu)], f.zero());
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j)
                    b.at(i, j) = ker.at(offset[static_cast<size_t>(nu)] + i * b.cols() + j, c);
            h.blocks.push_back(b);
        }
        out.push_back(std::move(h));
    }
    return out;
}

// ---------------------------------------------------------------------------
// predicates and functors

bool caret_injective(const Rep& r) {
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        if (r.graph.is_sink(v)) continue;
        Mat stacked(0, r.dims[static_cast<size_t>(v)]);
        for (int e : r.graph.out_edges(v))
            stacked = mat_vstack(r.field, stacked, r.mats[static_cast<size_t>(e)]);
        if (nullspace(r.field, stacked).cols() > 0) return false;
    }
    return true;
}

namespace {

// one step of the increasing kernel chain: sinks vanish, regular vertices
// take the joint edge preimage of the previous layer
Subspace ker_step(const Rep& r, const Subspace& prev) {
    std::vector<Mat> fam;
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        int d = r.dims[static_cast<size_t>(v)];
        if (r.graph.is_sink(v)) {
            fam.push_back(Mat(d, 0));
            continue;
        }
        Mat acc = Mat::identity(r.field, d);
        for (int e : r.graph.out_edges(v)) {
            Mat pre = preimage(r.field, r.mats[static_cast<size_t>(e)],
                               prev.basis[static_cast<size_t>(r.graph.dst(e))]);
            acc = span_intersect(r.field, acc, pre);
        }
        fam.push_back(acc);
    }
    return subspace_canonical(r, fam);
}

// one step of the decreasing image chain: incoming edge images, and sink
// components persist
Subspace sigma_step(const Rep& r, const Subspace& prev) {
    std::vector<Mat> fam;
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        int d = r.dims[static_cast<size_t>(v)];
        Mat acc = r.graph.is_sink(v) ? prev.basis[static_cast<size_t>(v)] : Mat(d, 0);
        for (int e = 0; e < r.graph.num_edges(); ++e) {
            if (r.graph.dst(e) != v) continue;
            acc = span_sum(r.field, acc,
                           mat_mul(r.field, r.mats[static_cast<size_t>(e)],
                                   prev.basis[static_cast<size_t>(r.graph.src(e))]));
        }
        fam.push_back(acc);
    }
    return subspace_canonical(r, fam);
}

} // namespace

Subspace ker_j(const Rep& r) {
    Subspace cur = subspace_zero(r);
    int cap = r.total_dim() + 2;
    for (int k = 0; k < cap; ++k) {
        Subspace next = ker_step(r, cur);
        if (subspace_eq(r.field, next, cur)) return cur;
        cur = next;
    }
    fail(ErrorCode::Internal, "ker_j chain failed to stabilize");
}

bool is_submodule(const Rep& r, const Subspace& s) {
    for (int e = 0; e < r.graph.num_edges(); ++e) {
        Mat img = mat_mul(r.field, r.mats[static_cast<size_t>(e)],
                          s.basis[static_cast<size_t>(r.graph.src(e))]);
        if (!col_space_contains(r.field, s.basis[static_cast<size_t>(r.graph.dst(e))], img))
            return false;
    }
    return true;
}

Subspace submodule_closure(const Rep& r, const std::vector<Mat>& seed) {
    Subspace cur = subspace_canonical(r, seed);
    while (true) {
        std::vector<Mat> fam = cur.basis;
        bool grew = false;
        for (int e = 0; e < r.graph.num_edges(); ++e) {
            Mat img = mat_mul(r.field, r.mats[static_cast<size_t>(e)],
                              cur.basis[static_cast<size_t>(r.graph.src(e))]);
            size_t t = static_cast<size_t>(r.graph.dst(e));
            Mat sum = span_sum(r.field, fam[t], img);
            if (sum.cols() != fam[t].cols()) grew = true;
            fam[t] = sum;
        }
        Subspace next = subspace_canonical(r, fam);
        if (!grew && subspace_eq(r.field, next, cur)) return cur;
        cur = next;
    }
}

Rep restrict_rep(const Rep& r, const Subspace& s) {
    if (!is_submodule(r, s)) fail(ErrorCode::NotASubmodule, "restriction requires a submodule");
    DimVector dims = subspace_dims(s);
    std::vector<Mat> mats;
    for (int e = 0; e < r.graph.num_edges(); ++e) {
        const Mat& src_b = s.basis[static_cast<size_t>(r.graph.src(e))];
        const Mat& dst_b = s.basis[static_cast<size_t>(r.graph.dst(e))];
        Mat img = mat_mul(r.field, r.mats[static_cast<size_t>(e)], src_b);
        mats.push_back(solve_in_col_space(r.field, dst_b, img));
    }
    return make_rep(r.graph, r.field, dims, mats);
}

QuotientResult quotient(const Rep& r, const Subspace& s) {
    if (!is_submodule(r, s)) fail(ErrorCode::NotASubmodule, "quotient requires a submodule");
    const FieldCtx& f = r.field;
    // per vertex: complete the rcef basis by standard vectors at non-pivot
    // rows, then read the quotient coordinates off the inverse
    std::vector<Mat> proj; // q_nu x d_nu
    std::vector<Mat> lift; // d_nu x q_nu, the chosen complement columns
    DimVector qdims;
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        const Mat& S = s.basis[static_cast<size_t>(v)];
        int d = r.dims[static_cast<size_t>(v)];
        std::vector<bool> pivot_row(static_cast<size_t>(d), false);
        for (int c = 0; c < S.cols(); ++c)
            for (int i = 0; i < d; ++i)
                if (!f.is_zero(S.at(i, c))) {
                    pivot_row[static_cast<size_t>(i)] = true;
                    break;
                }
        std::vector<int> comp_rows;
        for (int i = 0; i < d; ++i)
            if (!pivot_row[static_cast<size_t>(i)]) comp_rows.push_back(i);
        int q = static_cast<int>(comp_rows.size());
        qdims.push_back(q);
        Mat C(d, q, f.zero());
        for (int k = 0; k < q; ++k) C.at(comp_rows[static_cast<size_t>(k)], k) = f.one();
        Mat B = mat_hstack(f, S, C);
        if (B.rows() != B.cols()) fail(ErrorCode::Internal, "quotient basis completion failed");
        Mat Binv = B.rows() ? mat_inverse(f, B) : Mat(0, 0);
        Mat P(q, d, f.zero());
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < d; ++j) P.at(i, j) = Binv.at(S.cols() + i, j);
        proj.push_back(P);
        lift.push_back(C);
    }
    std::vector<Mat> mats;
    for (int e = 0; e < r.graph.num_edges(); ++e) {
        int sv = r.graph.src(e), dv = r.graph.dst(e);
        mats.push_back(mat_mul(f, proj[static_cast<size_t>(dv)],
                               mat_mul(f, r.mats[static_cast<size_t>(e)],
                                       lift[static_cast<size_t>(sv)])));
    }
    QuotientResult out{make_rep(r.graph, f, qdims, mats), RepHom{proj}};
    return out;
}

bool is_complete(const Rep& r, const Subspace& s) {
    if (!is_submodule(r, s)) fail(ErrorCode::NotASubmodule, "completeness requires a submodule");
    QuotientResult q = quotient(r, s);
    Subspace k = ker_j(q.rep);
    return subspace_eq(r.field, k, subspace_full(q.rep));
}

SigmaResult sigma(const Rep& r) {
    Subspace cur = subspace_full(r);
    int cap = r.total_dim() + 2;
    for (int k = 0; k < cap; ++k) {
        Subspace next = sigma_step(r, cur);
        if (subspace_eq(r.field, next, cur)) {
            return SigmaResult{cur, restrict_rep(r, cur)};
        }
        cur = next;
    }
    fail(ErrorCode::Internal, "sigma chain failed to stabilize");
}

bool is_full(const Rep& r) {
    SigmaResult s = sigma(r);
    return subspace_eq(r.field, s.space, subspace_full(r));
}

NablaResult nabla(const Rep& r) {
    Subspace k = ker_j(r);
    QuotientResult q = quotient(r, k);
    return NablaResult{q.rep, q.projection};
}

DimVector a_dimension(const Rep& r) {
    SigmaResult s = sigma(r);
    return nabla(s.rep).rep.dims;
}

bool satisfies_condition_I(const Rep& r) {
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        if (r.graph.is_sink(v)) continue;
        Mat stacked(0, r.dims[static_cast<size_t>(v)]);
        for (int e : r.graph.out_edges(v))
            stacked = mat_vstack(r.field, stacked, r.mats[static_cast<size_t>(e)]);
        if (stacked.rows() != stacked.cols()) return false;
        if (stacked.rows() > 0 && r.field.is_zero(mat_det(r.field, stacked))) return false;
    }
    return true;
}

Rep direct_sum(const Rep& a, const Rep& b) {
    require_compatible(a, b);
    DimVector dims;
    for (size_t v = 0; v < a.dims.size(); ++v) dims.push_back(a.dims[v] + b.dims[v]);
    std::vector<Mat> mats;
    for (size_t e = 0; e < a.mats.size(); ++e)
        mats.push_back(mat_block_diag(a.field, a.mats[e], b.mats[e]));
    return make_rep(a.graph, a.field, dims, mats);
}

// ---------------------------------------------------------------------------
// global coordinates

std::vector<int> vertex_offsets(const Rep& r) {
    std::vector<int> off(static_cast<size_t>(r.graph.num_vertices()) + 1, 0);
    for (int v = 0; v < r.graph.num_vertices(); ++v)
        off[static_cast<size_t>(v) + 1] = off[static_cast<size_t>(v)] + r.dims[static_cast<size_t>(v)];
    return off;
}

Mat path_operator(const Rep& r, const Path& p) {
    require_path(r.graph, p);
    const FieldCtx& f = r.field;
    int D = r.total_dim();
    std::vector<int> off = vertex_offsets(r);
    int sv = p.origin;
    Mat local = Mat::identity(f, r.dims[static_cast<size_t>(sv)]);
    int at = sv;
    for (int e : p.edges) {
        local = mat_mul(f, r.mats[static_cast<size_t>(e)], local);
        at = r.graph.dst(e);
    }
    Mat out(D, D, f.zero());
    for (int i = 0; i < local.rows(); ++i)
        for (int j = 0; j < local.cols(); ++j)
            out.at(off[static_cast<size_t>(at)] + i, off[static_cast<size_t>(sv)] + j) = local.at(i, j);
    return out;
}

Rep opposite_rep(const Rep& r) {
    std::vector<Graph::EdgeSpec> es;
    for (int e = 0; e < r.graph.num_edges(); ++e)
        es.push_back({r.graph.edge_name(e), r.graph.vertex_name(r.graph.dst(e)),
                      r.graph.vertex_name(r.graph.src(e))});
    std::vector<std::string> vs;
    for (int v = 0; v < r.graph.num_vertices(); ++v) vs.push_back(r.graph.vertex_name(v));
    Graph rg = Graph::make(vs, es);
    std::vector<Mat> mats;
    for (const Mat& m : r.mats) mats.push_back(mat_transpose(m));
    return make_rep(rg, r.field, r.dims, mats);
}

Subspace subspace_annihilator(const Rep& r, const Subspace& s) {
    std::vector<Mat> fam;
    for (size_t v = 0; v < s.basis.size(); ++v)
        fam.push_back(nullspace(r.field, mat_transpose(s.basis[v])));
    return subspace_canonical(r, fam);
}

Rep base_change(const Rep& r, const std::vector<Mat>& g) {
    std::vector<Mat> mats;
    for (int e = 0; e < r.graph.num_edges(); ++e) {
        int sv = r.graph.src(e), dv = r.graph.dst(e);
        mats.push_back(mat_mul(r.field, g[static_cast<size_t>(dv)],
                               mat_mul(r.field, r.mats[static_cast<size_t>(e)],
                                       mat_inverse(r.field, g[static_cast<size_t>(sv)]))));
    }
    return make_rep(r.graph, r.field, r.dims, mats);
}

Rep random_rep(const Graph& g, const FieldCtx& f, int max_dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dd(0, max_dim);
    DimVector dims;
    for (int v = 0; v < g.num_vertices(); ++v) dims.push_back(dd(rng));
    std::vector<Mat> mats;
    for (int e = 0; e < g.num_edges(); ++e)
        mats.push_back(mat_sample(f, dims[static_cast<size_t>(g.dst(e))],
                                  dims[static_cast<size_t>(g.src(e))], rng));
    return make_rep(g, f, dims, mats);
}

std::vector<Mat> random_base_change(const Rep& r, std::mt19937_64& rng) {
    std::vector<Mat> g;
    for (int d : r.dims) {
        Mat m(d, d);
        do {
            m = mat_sample(r.field, d, d, rng);
        } while (!mat_invertible(r.field, m));
        g.push_back(m);
    }
    return g;
}

std::string dimvec_to_string(const Graph& g, const DimVector& d) {
    std::ostringstream os;
    os << "(";
    for (int v = 0; v < g.num_vertices(); ++v)
        os << (v ? ", " : "") << g.vertex_name(v) << ":" << d[static_cast<size_t>(v)];
    os << ")";
    return os.str();
}

} // namespace lpa
