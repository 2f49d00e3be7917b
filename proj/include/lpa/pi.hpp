#ifndef LPA_PI_HPP
#define LPA_PI_HPP

#include <map>
#include <memory>

#include "lpa/rep.hpp"

namespace lpa {

// Shared context for elements of the Leavitt module of a representation.
// Elements are bound to one PiModule instance; mixing elements of different
// instances is a RepMismatch. The kernel of the canonical map is computed
// once here since the equality test consults it at every leaf.
class PiModule {
public:
    static std::shared_ptr<const PiModule> make(Rep r);

    const Rep& rep() const { return rep_; }
    const Subspace& kerj() const { return kerj_; }

private:
    PiModule(Rep r, Subspace k) : rep_(std::move(r)), kerj_(std::move(k)) {}
    Rep rep_;
    Subspace kerj_;
};

using PiModuleRef = std::shared_ptr<const PiModule>;

struct PiTerm {
    Path path;
    Mat vec; // column vector at the path's destination vertex
};

// Formal sum of (path, vector) terms; terms with equal paths merged, zero
// vectors dropped, so the representation is canonical per path support.
class PiElement {
public:
    PiElement() = default;
    explicit PiElement(PiModuleRef mod) : mod_(std::move(mod)) {}

    const PiModuleRef& module() const { return mod_; }
    const std::map<Path, Mat>& terms() const { return terms_; }
    bool no_terms() const { return terms_.empty(); }

    void add_term(const Path& p, const Mat& v); // validates shape, merges

private:
    PiModuleRef mod_;
    std::map<Path, Mat> terms_;
};

PiElement pi_zero(const PiModuleRef& mod);
PiElement pi_make(const PiModuleRef& mod, const std::vector<PiTerm>& terms);
PiElement pi_add(const PiElement& a, const PiElement& b);
PiElement pi_sub(const PiElement& a, const PiElement& b);
PiElement pi_scale(const Scalar& s, const PiElement& a);

// The canonical map j: a single-term element [nu, v].
PiElement j_embed(const PiModuleRef& mod, int vertex, const Mat& v);

// One expansion step of a term along the defining relation
// (p, x) ~ sum over outgoing edges e of (pe, x·e). SinkExpansion at sinks.
std::vector<PiTerm> expand_term(const PiModuleRef& mod, const PiTerm& t);

// Monomial coeff · p · q* with dst(p) = dst(q).
struct LMonomial {
    Scalar coeff;
    Path p;
    Path q;
};

using LElement = std::vector<LMonomial>;

void require_monomial(const Graph& g, const LMonomial& m);

PiElement act_edge(const PiElement& w, int edge);
PiElement act_vertex(const PiElement& w, int vertex);
PiElement act_edge_star(const PiElement& w, int edge);
PiElement act_path(const PiElement& w, const Path& p);
PiElement act_monomial(const PiElement& w, const LMonomial& m);
PiElement act_lelement(const PiElement& w, const LElement& l);

// Joint refinement onto a common prefix-free support; returned elements are
// equal to the inputs in the Leavitt module.
std::pair<PiElement, PiElement> refine_to_antichain(const PiElement& a, const PiElement& b);

// Expansion of an element onto the prefix-free closure of its own support.
PiElement pi_normal_form(const PiElement& a);

// Complete equality decision: refine jointly, then test each leaf difference
// for membership in the kernel of the canonical map.
bool pi_eq(const PiElement& a, const PiElement& b);
bool pi_is_zero(const PiElement& a);

// The induced map on Leavitt modules of a morphism theta: applies the vertex
// block at each term's destination. Source element must live on src_mod.
PiElement pi_hom_apply(const PiModuleRef& src_mod, const PiModuleRef& dst_mod,
                       const RepHom& theta, const PiElement& w);

struct RelationReport {
    bool ok = true;
    long checks = 0;
    std::string failure;
};

// Seeded property harness for the defining relations: vertex orthogonality,
// source/range identities, CK1, CK2 at regular vertices, and the iterated
// CK2 identity sum over E^n of (w·q)·q* = w for n <= 3.
RelationReport verify_relations(const PiModuleRef& mod, int samples, std::uint64_t seed);

PiElement random_pi_element(const PiModuleRef& mod, std::mt19937_64& rng, int max_terms = 3,
                            int max_len = 3);

std::string pi_to_string(const PiElement& a);

} // namespace lpa

#endif
