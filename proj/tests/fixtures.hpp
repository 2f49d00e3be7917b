#ifndef LPA_TEST_FIXTURES_HPP
#define LPA_TEST_FIXTURES_HPP

// Shared worked-example fixtures on the bouquet of two loops.

#include "lpa/rep.hpp"

namespace lpa::fixtures {

inline Mat mk(const FieldCtx& f, int r, int c, std::vector<long> vals) {
    Mat m(r, c, f.zero());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = f.from_int(vals[static_cast<size_t>(i * c + j)]);
    return m;
}

// 2x2 pair that is full but degenerate: M1 = [0 1; 0 1], M2 = [0 1; 0 0]
inline Rep full_degenerate(const FieldCtx& f) {
    Graph g = Graph::bouquet(2);
    return make_rep(g, f, {2},
                    {mk(f, 2, 2, {0, 1, 0, 1}), mk(f, 2, 2, {0, 1, 0, 0})});
}

// 3x3 pair that is nondegenerate but not full:
// M1 = [1 1 0; 0 0 1; 0 0 0], M2 = [1 0 0; 0 0 1; 0 0 0]
inline Rep nondegenerate_not_full(const FieldCtx& f) {
    Graph g = Graph::bouquet(2);
    return make_rep(g, f, {3},
                    {mk(f, 3, 3, {1, 1, 0, 0, 0, 1, 0, 0, 0}),
                     mk(f, 3, 3, {1, 0, 0, 0, 0, 1, 0, 0, 0})});
}

// both generators the same nilpotent matrix: kernel of j is everything
inline Rep nilpotent_pair(const FieldCtx& f) {
    Graph g = Graph::bouquet(2);
    Mat n = mk(f, 2, 2, {0, 1, 0, 0});
    return make_rep(g, f, {2}, {n, n});
}

inline Mat basis_vec(const FieldCtx& f, int dim, int i) {
    Mat v(dim, 1, f.zero());
    v.at(i, 0) = f.one();
    return v;
}

} // namespace lpa::fixtures

#endif
