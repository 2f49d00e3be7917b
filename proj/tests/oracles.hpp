#ifndef LPA_TEST_ORACLES_HPP
#define LPA_TEST_ORACLES_HPP

// Test-only oracles, kept independent of the library's chain-stabilization
// implementations: these work by brute-force path enumeration and exhaustive
// subspace scans.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpa/rep.hpp"

namespace lpa::oracle {

// {v : v·p = 0 for all p in E^D}, D = total dimension, by direct path
// enumeration (kernel of the stacked path operators per vertex).
inline Subspace ker_j_bruteforce(const Rep& r) {
    int D = r.total_dim();
    std::vector<Mat> fam;
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        Mat stacked(0, r.dims[static_cast<size_t>(v)]);
        for (const Path& p : paths_E(r.graph, D, v)) {
            Mat op = Mat::identity(r.field, r.dims[static_cast<size_t>(v)]);
            for (int e : p.edges) op = mat_mul(r.field, r.mats[static_cast<size_t>(e)], op);
            stacked = mat_vstack(r.field, stacked, op);
        }
        fam.push_back(nullspace(r.field, stacked));
    }
    return subspace_canonical(r, fam);
}

// completeness by the definition: for every ambient basis vector v there is
// k <= D+1 with v·p in the subspace for all p in E^k
inline bool complete_bruteforce(const Rep& r, const Subspace& s) {
    if (!is_submodule(r, s)) return false;
    int D = r.total_dim();
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        for (int col = 0; col < r.dims[static_cast<size_t>(v)]; ++col) {
            Mat vec(r.dims[static_cast<size_t>(v)], 1, r.field.zero());
            vec.at(col, 0) = r.field.one();
            bool eventually = false;
            for (int k = 1; k <= D + 1 && !eventually; ++k) {
                bool all_in = true;
                for (const Path& p : paths_E(r.graph, k, v)) {
                    Mat img = vec;
                    for (int e : p.edges) img = mat_mul(r.field, r.mats[static_cast<size_t>(e)], img);
                    if (!in_col_space(r.field, s.basis[static_cast<size_t>(path_dst(r.graph, p))], img)) {
                        all_in = false;
                        break;
                    }
                }
                if (all_in) eventually = true;
            }
            if (!eventually) return false;
        }
    }
    return true;
}

// all subspace families of a representation over F_p (exhaustive; desk-scale
// dimensions only). Enumerates every set of spanning columns per vertex.
inline std::vector<Subspace> all_subspaces(const Rep& r) {
    const FieldCtx& f = r.field;
    std::uint64_t q = static_cast<std::uint64_t>(f.p());
    // per-vertex list of all subspaces of F_q^d, as canonical bases
    std::vector<std::vector<Mat>> per_vertex;
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        int d = r.dims[static_cast<size_t>(v)];
        std::vector<Mat> subs;
        std::set<std::string> seen;
        // spans of all subsets of all nonzero vectors is wasteful; instead
        // enumerate all matrices with up to d columns and canonicalize
        std::uint64_t total = 1;
        for (int i = 0; i < d * d; ++i) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            Mat m(d, d, f.zero());
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    m.at(i, j) = f.from_int(static_cast<std::int64_t>(c % q));
                    c /= q;
                }
            Mat canon = rcef(f, m);
            std::string key = mat_to_string(f, canon);
            if (seen.insert(key).second) subs.push_back(canon);
        }
        per_vertex.push_back(subs);
    }
    // cartesian product over vertices
    std::vector<Subspace> out;
    std::vector<size_t> idx(per_vertex.size(), 0);
    while (true) {
        std::vector<Mat> fam;
        for (size_t v = 0; v < per_vertex.size(); ++v) fam.push_back(per_vertex[v][idx[v]]);
        out.push_back(subspace_canonical(r, fam));
        size_t pos = 0;
        while (pos < idx.size()) {
            if (++idx[pos] < per_vertex[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (idx.empty() || pos == idx.size()) break;
    }
    return out;
}

// smallest complete submodule as the intersection of all complete
// submodules found by exhaustive enumeration
inline Subspace sigma_bruteforce(const Rep& r) {
    Subspace acc = subspace_full(r);
    for (const Subspace& s : all_subspaces(r)) {
        if (!is_submodule(r, s)) continue;
        if (!complete_bruteforce(r, s)) continue;
        acc = subspace_intersect(r, acc, s);
    }
    return acc;
}

} // namespace lpa::oracle

#endif
