#include "lpa/chen.hpp"

#include <algorithm>

namespace lpa {

namespace {

// Tail bookkeeping for a cycle c: tail i is the ray obtained by dropping the
// first i edges of c^∞; it sits at the source of edge c_{i+1} and its
// one-step shift crosses that edge.
struct TailLayout {
    int m = 0;
    std::vector<int> vertex;      // vertex of tail i
    std::vector<int> local;       // index of tail i within its vertex block
    DimVector dims;               // per-vertex tail counts
};

TailLayout tail_layout(const Graph& g, const Path& c) {
    TailLayout lay;
    lay.m = c.length();
    lay.dims.assign(static_cast<size_t>(g.num_vertices()), 0);
    for (int i = 0; i < lay.m; ++i) {
        int v = g.src(c.edges[static_cast<size_t>(i)]);
        lay.vertex.push_back(v);
        lay.local.push_back(lay.dims[static_cast<size_t>(v)]++);
    }
    return lay;
}

// Shared block construction: tails carry blocks of size b, the transition
// out of tail 0 is twisted by X, all other transitions are identities.
Rep cyclic_block_rep(const Graph& g, const FieldCtx& f, const Path& c, const Mat& X) {
    TailLayout lay = tail_layout(g, c);
    int b = X.rows();
    DimVector dims(static_cast<size_t>(g.num_vertices()), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        dims[static_cast<size_t>(v)] = lay.dims[static_cast<size_t>(v)] * b;
    std::vector<Mat> mats;
    for (int e = 0; e < g.num_edges(); ++e)
        mats.push_back(Mat(dims[static_cast<size_t>(g.dst(e))],
                           dims[static_cast<size_t>(g.src(e))], f.zero()));
    Mat ident = Mat::identity(f, b);
    for (int i = 0; i < lay.m; ++i) {
        int e = c.edges[static_cast<size_t>(i)];
        int j = (i + 1) % lay.m;
        const Mat& block = (i == 0) ? X : ident;
        Mat& M = mats[static_cast<size_t>(e)];
        int row0 = lay.local[static_cast<size_t>(j)] * b;
        int col0 = lay.local[static_cast<size_t>(i)] * b;
        for (int r = 0; r < b; ++r)
            for (int s = 0; s < b; ++s) M.at(row0 + r, col0 + s) = block.at(r, s);
    }
    return make_rep(g, f, dims, mats);
}

} // namespace

Rep chen_cyclic(const Graph& g, const FieldCtx& f, const Path& c, const Scalar& lambda) {
    if (!is_prime_cycle(g, c)) fail(ErrorCode::NotPrime, "cycle must be prime");
    if (f.is_zero(lambda)) fail(ErrorCode::ZeroLambda, "twist scalar must be nonzero");
    Mat X(1, 1, lambda);
    return cyclic_block_rep(g, f, c, X);
}

Rep chen_sink(const Graph& g, const FieldCtx& f, int omega) {
    if (omega < 0 || omega >= g.num_vertices()) fail(ErrorCode::UnknownVertex, "sink out of range");
    if (!g.is_sink(omega)) fail(ErrorCode::NotASink, "vertex emits edges");
    DimVector dims(static_cast<size_t>(g.num_vertices()), 0);
    dims[static_cast<size_t>(omega)] = 1;
    std::vector<Mat> mats;
    for (int e = 0; e < g.num_edges(); ++e)
        mats.push_back(Mat(dims[static_cast<size_t>(g.dst(e))],
                           dims[static_cast<size_t>(g.src(e))], f.zero()));
    return make_rep(g, f, dims, mats);
}

Rep anh_nam(const Graph& g, const FieldCtx& f, const Path& c, const Poly& P) {
    if (!is_prime_cycle(g, c)) fail(ErrorCode::NotPrime, "cycle must be prime");
    if (!poly_is_irreducible(f, P)) fail(ErrorCode::NotIrreducible, "twist polynomial must be irreducible");
    return cyclic_block_rep(g, f, c, companion_matrix(f, P));
}

Rep twist_matrix(const Graph& g, const FieldCtx& f, const Path& c, const Mat& X) {
    if (!is_prime_cycle(g, c)) fail(ErrorCode::NotPrime, "cycle must be prime");
    if (X.rows() != X.cols() || X.rows() < 1)
        fail(ErrorCode::ShapeMismatch, "twist matrix must be square and nonempty");
    Poly cp = char_poly(f, X);
    if (!poly_is_irreducible(f, cp))
        fail(ErrorCode::ReducibleTwist, "characteristic polynomial of the twist factors");
    return cyclic_block_rep(g, f, c, X);
}

Rep vector_variant(const Graph& g, const FieldCtx& f, const Path& c, const Mat& v,
                   bool strict_literal) {
    if (!is_prime_cycle(g, c)) fail(ErrorCode::NotPrime, "cycle must be prime");
    TailLayout lay = tail_layout(g, c);
    int m = lay.m;
    if (v.rows() != m || v.cols() != 1)
        fail(ErrorCode::ShapeMismatch, "variant vector must be a column over the tail basis");
    if (mat_is_zero(f, v)) fail(ErrorCode::ZeroVector, "variant vector must be nonzero");
    // the distinguished tail r = t_{m-1}: its one-step tail is the ray itself
    int rtail = m - 1;
    int wrap_edge = c.edges[static_cast<size_t>(rtail)];
    int target_vertex = g.dst(wrap_edge); // = vertex of t_0
    for (int i = 0; i < m; ++i) {
        if (lay.vertex[static_cast<size_t>(i)] == target_vertex) continue;
        if (!f.is_zero(v.at(i, 0)))
            fail(ErrorCode::ShapeMismatch,
                 "variant vector supported off the wrap target vertex");
    }

    DimVector dims = lay.dims;
    std::vector<Mat> mats;
    for (int e = 0; e < g.num_edges(); ++e)
        mats.push_back(Mat(dims[static_cast<size_t>(g.dst(e))],
                           dims[static_cast<size_t>(g.src(e))], f.zero()));
    // untwisted shift for tails other than r
    for (int i = 0; i + 1 < m; ++i) {
        int e = c.edges[static_cast<size_t>(i)];
        mats[static_cast<size_t>(e)].at(lay.local[static_cast<size_t>(i + 1)],
                                        lay.local[static_cast<size_t>(i)]) = f.one();
    }
    auto set_variant_column = [&](int edge) {
        Mat& M = mats[static_cast<size_t>(edge)];
        int col = lay.local[static_cast<size_t>(rtail)];
        for (int i = 0; i < m; ++i) {
            if (f.is_zero(v.at(i, 0))) continue;
            if (lay.vertex[static_cast<size_t>(i)] != g.dst(edge))
                fail(ErrorCode::ShapeMismatch,
                     "strict-literal reading maps the distinguished tail across an edge "
                     "whose range does not carry the vector");
            M.at(lay.local[static_cast<size_t>(i)], col) = v.at(i, 0);
        }
    };
    if (strict_literal) {
        for (int e : g.out_edges(lay.vertex[static_cast<size_t>(rtail)])) set_variant_column(e);
    } else {
        set_variant_column(wrap_edge);
    }
    return make_rep(g, f, dims, mats);
}

namespace {

TruncationReport shift_truncation(const Graph& g, const FieldCtx& f,
                                  const std::vector<int>& layer_vertex,
                                  const std::vector<int>& layer_edge) {
    int depth = static_cast<int>(layer_vertex.size()) - 1;
    DimVector dims(static_cast<size_t>(g.num_vertices()), 0);
    std::vector<int> local(layer_vertex.size());
    for (size_t j = 0; j < layer_vertex.size(); ++j)
        local[j] = dims[static_cast<size_t>(layer_vertex[j])]++;
    std::vector<Mat> mats;
    for (int e = 0; e < g.num_edges(); ++e)
        mats.push_back(Mat(dims[static_cast<size_t>(g.dst(e))],
                           dims[static_cast<size_t>(g.src(e))], f.zero()));
    for (int j = 0; j < depth; ++j) {
        int e = layer_edge[static_cast<size_t>(j)];
        mats[static_cast<size_t>(e)].at(local[static_cast<size_t>(j + 1)],
                                        local[static_cast<size_t>(j)]) = f.one();
    }
    TruncationReport rep{make_rep(g, f, dims, mats), {}};
    // descending chain: span of the layers from k on, down to the zero space
    for (int k = 1; k <= depth + 1; ++k) {
        std::vector<Mat> fam;
        for (int v = 0; v < g.num_vertices(); ++v)
            fam.push_back(Mat(dims[static_cast<size_t>(v)], 0));
        for (int j = k; j <= depth; ++j) {
            int v = layer_vertex[static_cast<size_t>(j)];
            Mat col(dims[static_cast<size_t>(v)], 1, f.zero());
            col.at(local[static_cast<size_t>(j)], 0) = f.one();
            fam[static_cast<size_t>(v)] = mat_hstack(f, fam[static_cast<size_t>(v)], col);
        }
        rep.chain.push_back(subspace_canonical(rep.rep, fam));
    }
    return rep;
}

} // namespace

TruncationReport graded_trunc(const Graph& g, const FieldCtx& f, int nu, const Path& c,
                              int depth) {
    if (!is_cycle(g, c) || c.origin != nu)
        fail(ErrorCode::CycleMismatch, "truncation requires a cycle based at the given vertex");
    if (depth < 2) fail(ErrorCode::CycleMismatch, "truncation depth must be at least 2");
    int m = c.length();
    std::vector<int> layer_vertex, layer_edge;
    for (int j = 0; j <= depth; ++j)
        layer_vertex.push_back(g.src(c.edges[static_cast<size_t>(j % m)]));
    for (int j = 0; j < depth; ++j) layer_edge.push_back(c.edges[static_cast<size_t>(j % m)]);
    return shift_truncation(g, f, layer_vertex, layer_edge);
}

TruncationReport irrational_trunc(const Graph& g, const FieldCtx& f, const Path& prefix,
                                  int depth) {
    if (!path_valid(g, prefix)) fail(ErrorCode::InvalidPrefix, "prefix is not a path");
    if (depth < 1 || prefix.length() < depth)
        fail(ErrorCode::InvalidPrefix, "prefix must be at least as long as the depth");
    std::vector<int> layer_vertex, layer_edge;
    for (int j = 0; j < depth; ++j) {
        layer_vertex.push_back(g.src(prefix.edges[static_cast<size_t>(j)]));
        layer_edge.push_back(prefix.edges[static_cast<size_t>(j)]);
    }
    layer_vertex.push_back(depth < prefix.length()
                               ? g.src(prefix.edges[static_cast<size_t>(depth)])
                               : g.dst(prefix.edges[static_cast<size_t>(depth - 1)]));
    return shift_truncation(g, f, layer_vertex, layer_edge);
}

std::uint64_t count_prime_classes(int n, int d) {
    if (n < 2 || d < 1) fail(ErrorCode::ParseError, "count_prime_classes requires n >= 2, d >= 1");
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) {
        total *= static_cast<std::uint64_t>(n);
        if (total > (1ull << 26))
            fail(ErrorCode::Unsupported, "word scan too large for the exhaustive counter");
    }
    std::vector<int> w(static_cast<size_t>(d));
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < d; ++i) {
            w[static_cast<size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(n));
            c /= static_cast<std::uint64_t>(n);
        }
        bool prime = true;
        for (int len = 1; len < d && prime; ++len) {
            if (d % len != 0) continue;
            bool power = true;
            for (int i = 0; i < d && power; ++i)
                if (w[static_cast<size_t>(i)] != w[static_cast<size_t>(i % len)]) power = false;
            if (power) prime = false;
        }
        if (!prime) continue;
        bool minimal = true;
        for (int r = 1; r < d && minimal; ++r) {
            for (int i = 0; i < d; ++i) {
                int a = w[static_cast<size_t>((r + i) % d)];
                int b = w[static_cast<size_t>(i)];
                if (a != b) {
                    if (a < b) minimal = false;
                    break;
                }
            }
        }
        if (minimal) ++count;
    }
    return count;
}

} // namespace lpa
