#ifndef LPA_REP_HPP
#define LPA_REP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

// Per-vertex dimension tuple, indexed like the graph's vertices.
using DimVector = std::vector<int>;

int dim_total(const DimVector& d);

// Finite-dimensional representation of the quiver algebra: one exact matrix
// per edge, column-vector convention v·e := mats[e] · v with mats[e] of shape
// dims[dst(e)] x dims[src(e)].
struct Rep {
    Graph graph;
    FieldCtx field;
    DimVector dims;
    std::vector<Mat> mats;

    int total_dim() const { return dim_total(dims); }
};

Rep make_rep(Graph g, FieldCtx f, DimVector dims, std::vector<Mat> mats);

// Checks all shape invariants; throws ShapeMismatch with edge context.
void validate_rep(const Rep& r);

bool rep_eq(const Rep& a, const Rep& b);

void require_compatible(const Rep& a, const Rep& b); // same graph and field

// Vertex-indexed family of subspaces, each stored as a reduced-column-echelon
// basis so equality is entrywise comparison.
struct Subspace {
    std::vector<Mat> basis;
};

Subspace subspace_zero(const Rep& r);
Subspace subspace_full(const Rep& r);
Subspace subspace_canonical(const Rep& r, std::vector<Mat> family);
DimVector subspace_dims(const Subspace& s);
bool subspace_eq(const FieldCtx& f, const Subspace& a, const Subspace& b);
bool subspace_leq(const FieldCtx& f, const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Rep& r, const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Rep& r, const Subspace& a, const Subspace& b);

// Morphism of representations, one block per vertex; equivariance
// blocks[re] · mats[e] = mats'[e] · blocks[se].
struct RepHom {
    std::vector<Mat> blocks;
};

RepHom hom_identity(const Rep& r);
bool hom_is_equivariant(const Rep& v, const Rep& w, const RepHom& h);
bool hom_is_invertible(const Rep& v, const Rep& w, const RepHom& h);
RepHom hom_compose(const Rep& u, const Rep& v, const Rep& w, const RepHom& f,
                   const RepHom& g); // g after f
Subspace hom_image(const Rep& v, const Rep& w, const RepHom& h);
Subspace hom_image_of(const Rep& v, const Rep& w, const RepHom& h, const Subspace& s);
Subspace hom_preimage_of(const Rep& v, const Rep& w, const RepHom& h, const Subspace& s);

// Basis of the space of morphisms v -> w (same graph, same field).
std::vector<RepHom> hom_space(const Rep& v, const Rep& w);

// ---------------------------------------------------------------------------
// structure functors and predicates

// true iff every non-sink caret map (the stacked edge matrices out of a
// vertex) has trivial kernel; sinks impose no condition.
bool caret_injective(const Rep& r);

// Kernel of the canonical map into the Leavitt-module: the stabilized
// increasing chain K_1 ⊆ K_2 ⊆ ... where K_1 kills all length-1 paths (sink
// components vanish) and K_{k+1} is the preimage of K_k under every edge.
Subspace ker_j(const Rep& r);

bool is_submodule(const Rep& r, const Subspace& s);

// Smallest submodule containing the given per-vertex vectors (spinning).
Subspace submodule_closure(const Rep& r, const std::vector<Mat>& seed);

// Representation induced on a submodule, with the inclusion data implicit in
// the subspace basis.
Rep restrict_rep(const Rep& r, const Subspace& s);

struct QuotientResult {
    Rep rep;
    RepHom projection;
};
QuotientResult quotient(const Rep& r, const Subspace& s); // NotASubmodule if not closed

// true iff the quotient by s is eventually killed by all long paths
// (equivalently ker_j of the quotient is everything).
bool is_complete(const Rep& r, const Subspace& s);

struct SigmaResult {
    Subspace space;
    Rep rep; // the smallest complete submodule as a standalone representation
};

// Smallest complete submodule, computed as the stabilized decreasing chain
// W_k = span{v·p : p ∈ E^k}.
SigmaResult sigma(const Rep& r);

bool is_full(const Rep& r);

struct NablaResult {
    Rep rep;
    RepHom projection;
};
NablaResult nabla(const Rep& r); // quotient by ker_j; result is nondegenerate

// Dimension vector of ∇(Σ(r)).
DimVector a_dimension(const Rep& r);

// Every non-sink caret map a bijection (the image-of-Λ characterization).
bool satisfies_condition_I(const Rep& r);

Rep direct_sum(const Rep& a, const Rep& b);

// ---------------------------------------------------------------------------
// global-coordinate helpers (⊕_ν V_ν with vertex blocks in vertex order)

std::vector<int> vertex_offsets(const Rep& r);

// The operator of a path acting on ⊕V_ν (vertices act as projections).
Mat path_operator(const Rep& r, const Path& p);

// The representation on the reversed graph with transposed matrices.
Rep opposite_rep(const Rep& r);

// Per-vertex annihilator of a subspace family of the opposite module.
Subspace subspace_annihilator(const Rep& r, const Subspace& s);

// Conjugated representation g . r with per-vertex invertible blocks.
Rep base_change(const Rep& r, const std::vector<Mat>& g);

Rep random_rep(const Graph& g, const FieldCtx& f, int max_dim, std::mt19937_64& rng);
std::vector<Mat> random_base_change(const Rep& r, std::mt19937_64& rng);

std::string dimvec_to_string(const Graph& g, const DimVector& d);

} // namespace lpa

#endif
