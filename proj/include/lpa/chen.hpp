#ifndef LPA_CHEN_HPP
#define LPA_CHEN_HPP

#include "lpa/rep.hpp"

namespace lpa {

// The cyclic Chen module on a prime cycle: basis the |c| tails of the ray
// c^∞, shift action along the cycle, the twist scalar placed on the
// transition out of the tail t0 = c^∞ itself.
Rep chen_cyclic(const Graph& g, const FieldCtx& f, const Path& c, const Scalar& lambda);

// The sink module: one dimension at the sink, all edges act by zero.
Rep chen_sink(const Graph& g, const FieldCtx& f, int omega);

// The polynomial-twisted module on tails ⊗ k[x]/P: the companion matrix of P
// replaces the wrap scalar. Prime cycles only; exclusivity is not required.
Rep anh_nam(const Graph& g, const FieldCtx& f, const Path& c, const Poly& P);

// Same block pattern with an arbitrary matrix whose characteristic
// polynomial is irreducible.
Rep twist_matrix(const Graph& g, const FieldCtx& f, const Path& c, const Mat& X);

// Tail module where the wrap image of the distinguished tail (the one whose
// one-step tail is c^∞) is replaced by an arbitrary nonzero vector v in the
// tail space. `strict_literal` switches to the reading where every edge out
// of that tail's vertex sends it to v.
Rep vector_variant(const Graph& g, const FieldCtx& f, const Path& c, const Mat& v,
                   bool strict_literal = false);

// Finite truncation demonstrators: the representation together with a
// strictly descending chain of complete submodules ending at zero.
struct TruncationReport {
    Rep rep;
    std::vector<Subspace> chain; // indices 1..depth, then the zero space
};

// Depth-truncated graded module on the reversed-path basis along a cycle
// based at nu.
TruncationReport graded_trunc(const Graph& g, const FieldCtx& f, int nu, const Path& c,
                              int depth);

// Depth-truncated tail module of an arbitrary finite ray prefix.
TruncationReport irrational_trunc(const Graph& g, const FieldCtx& f, const Path& prefix,
                                  int depth);

// |W_d|: prime words of length d over n letters modulo rotation, by
// exhaustive scan with primality and rotation canonicalization.
std::uint64_t count_prime_classes(int n, int d);

} // namespace lpa

#endif
