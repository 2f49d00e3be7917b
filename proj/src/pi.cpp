#include "lpa/pi.hpp"

#include <set>
#include <sstream>

namespace lpa {

namespace {

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

void require_same_module(const PiElement& a, const PiElement& b) {
    if (a.module() != b.module())
        fail(ErrorCode::RepMismatch, "elements bound to different representations");
}

} // namespace

std::shared_ptr<const PiModule> PiModule::make(Rep r) {
    validate_rep(r);
    Subspace k = ker_j(r);
    return std::shared_ptr<const PiModule>(new PiModule(std::move(r), std::move(k)));
}

void PiElement::add_term(const Path& p, const Mat& v) {
    const Rep& r = mod_->rep();
    require_path(r.graph, p);
    int at = path_dst(r.graph, p);
    if (v.cols() != 1 || v.rows() != r.dims[static_cast<size_t>(at)])
        fail(ErrorCode::ShapeMismatch, "term vector does not live at the path destination");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (!mat_is_zero(r.field, v)) terms_.emplace(p, v);
        return;
    }
    Mat sum = mat_add(r.field, it->second, v);
    if (mat_is_zero(r.field, sum))
        terms_.erase(it);
    else
        it->second = sum;
}

PiElement pi_zero(const PiModuleRef& mod) { return PiElement(mod); }

PiElement pi_make(const PiModuleRef& mod, const std::vector<PiTerm>& terms) {
    PiElement e(mod);
    for (const PiTerm& t : terms) e.add_term(t.path, t.vec);
    return e;
}

PiElement pi_add(const PiElement& a, const PiElement& b) {
    require_same_module(a, b);
    PiElement out = a;
    for (const auto& [p, v] : b.terms()) out.add_term(p, v);
    return out;
}

PiElement pi_sub(const PiElement& a, const PiElement& b) {
    require_same_module(a, b);
    const FieldCtx& f = a.module()->rep().field;
    PiElement out = a;
    for (const auto& [p, v] : b.terms()) out.add_term(p, mat_neg(f, v));
    return out;
}

PiElement pi_scale(const Scalar& s, const PiElement& a) {
    const FieldCtx& f = a.module()->rep().field;
    PiElement out(a.module());
    for (const auto& [p, v] : a.terms()) out.add_term(p, mat_scale(f, s, v));
    return out;
}

PiElement j_embed(const PiModuleRef& mod, int vertex, const Mat& v) {
    PiElement e(mod);
    e.add_term(Path{vertex, {}}, v);
    return e;
}

std::vector<PiTerm> expand_term(const PiModuleRef& mod, const PiTerm& t) {
    const Rep& r = mod->rep();
    require_path(r.graph, t.path);
    int at = path_dst(r.graph, t.path);
    if (r.graph.is_sink(at))
        fail(ErrorCode::SinkExpansion, "terms at sinks are terminal");
    std::vector<PiTerm> out;
    for (int e : r.graph.out_edges(at)) {
        Path p = t.path;
        p.edges.push_back(e);
        Mat v = mat_mul(r.field, r.mats[static_cast<size_t>(e)], t.vec);
        if (!mat_is_zero(r.field, v)) out.push_back({p, v});
    }
    return out;
}

void require_monomial(const Graph& g, const LMonomial& m) {
    require_path(g, m.p);
    require_path(g, m.q);
    if (path_dst(g, m.p) != path_dst(g, m.q))
        fail(ErrorCode::MalformedMonomial, "monomial p q* requires r(p) = r(q)");
}

PiElement act_edge(const PiElement& w, int edge) {
    const Rep& r = w.module()->rep();
    if (edge < 0 || edge >= r.graph.num_edges()) fail(ErrorCode::UnknownEdge, "edge out of range");
    PiElement out(w.module());
    for (const auto& [p, x] : w.terms()) {
        if (!p.edges.empty()) {
            // [eu, x]·f = delta_{f,e} [u, x]
            if (p.edges.front() != edge) continue;
            Path u;
            u.origin = r.graph.dst(edge);
            u.edges.assign(p.edges.begin() + 1, p.edges.end());
            out.add_term(u, x);
        } else {
            // [nu, x]·f = [rf, x·f] if sf = nu (and 0 at sinks)
            if (r.graph.src(edge) != p.origin) continue;
            Mat v = mat_mul(r.field, r.mats[static_cast<size_t>(edge)], x);
            out.add_term(Path{r.graph.dst(edge), {}}, v);
        }
    }
    return out;
}

PiElement act_vertex(const PiElement& w, int vertex) {
    const Rep& r = w.module()->rep();
    if (vertex < 0 || vertex >= r.graph.num_vertices())
        fail(ErrorCode::UnknownVertex, "vertex out of range");
    PiElement out(w.module());
    for (const auto& [p, x] : w.terms())
        if (p.origin == vertex) out.add_term(p, x);
    return out;
}

PiElement act_edge_star(const PiElement& w, int edge) {
    LMonomial m;
    m.coeff = w.module()->rep().field.one();
    const Graph& g = w.module()->rep().graph;
    m.p = Path{g.dst(edge), {}};
    m.q = Path{g.src(edge), {edge}};
    return act_monomial(w, m);
}

PiElement act_path(const PiElement& w, const Path& p) {
    const Rep& r = w.module()->rep();
    require_path(r.graph, p);
    if (p.edges.empty()) return act_vertex(w, p.origin);
    PiElement cur = w;
    for (int e : p.edges) cur = act_edge(cur, e);
    return cur;
}

PiElement act_monomial(const PiElement& w, const LMonomial& m) {
    const Rep& r = w.module()->rep();
    require_monomial(r.graph, m);
    PiElement cur = act_path(w, m.p);
    // [u, x]·q* = [q u, x] when r(q) = s(u), else 0
    PiElement out(w.module());
    if (m.q.edges.empty()) {
        out = act_vertex(cur, m.q.origin);
    } else {
        int rq = path_dst(r.graph, m.q);
        for (const auto& [u, x] : cur.terms()) {
            if (u.origin != rq) continue;
            Path glued = m.q;
            glued.edges.insert(glued.edges.end(), u.edges.begin(), u.edges.end());
            out.add_term(glued, x);
        }
    }
    return pi_scale(m.coeff, out);
}

PiElement act_lelement(const PiElement& w, const LElement& l) {
    PiElement out(w.module());
    for (const LMonomial& m : l) out = pi_add(out, act_monomial(w, m));
    return out;
}

// ---------------------------------------------------------------------------
// antichain refinement and equality

namespace {

// Prefix-free refinement of a path set: whenever p is a proper prefix of
// another member, replace p by all its one-step extensions. Terminates since
// the maximal length bounds the expansion depth; offending vertices are
// never sinks because something extends them.
std::set<Path> antichain_closure(const Graph& g, std::set<Path> paths) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = paths.begin(); it != paths.end(); ++it) {
            bool is_prefix = false;
            for (const Path& q : paths) {
                if (q.edges.size() <= it->edges.size()) continue;
                if (path_is_prefix(*it, q)) {
                    is_prefix = true;
                    break;
                }
            }
            if (is_prefix) {
                Path p = *it;
                paths.erase(it);
                int at = path_dst(g, p);
                for (int e : g.out_edges(at)) {
                    Path ext = p;
                    ext.edges.push_back(e);
                    paths.insert(ext);
                }
                changed = true;
                break;
            }
        }
    }
    return paths;
}

void expand_onto(const PiModuleRef& mod, const Path& p, const Mat& x,
                 const std::set<Path>& frontier, PiElement& out) {
    if (frontier.count(p)) {
        out.add_term(p, x);
        return;
    }
    const Rep& r = mod->rep();
    if (mat_is_zero(r.field, x)) return;
    int at = path_dst(r.graph, p);
    if (r.graph.is_sink(at))
        fail(ErrorCode::Internal, "refinement reached a sink off the frontier");
    for (int e : r.graph.out_edges(at)) {
        Path ext = p;
        ext.edges.push_back(e);
        expand_onto(mod, ext, mat_mul(r.field, r.mats[static_cast<size_t>(e)], x), frontier, out);
    }
}

PiElement expand_to_frontier(const PiElement& a, const std::set<Path>& frontier) {
    PiElement out(a.module());
    for (const auto& [p, x] : a.terms()) expand_onto(a.module(), p, x, frontier, out);
    return out;
}

} // namespace

PiElement pi_normal_form(const PiElement& a) {
    const Graph& g = a.module()->rep().graph;
    std::set<Path> support;
    for (const auto& [p, x] : a.terms()) support.insert(p);
    return expand_to_frontier(a, antichain_closure(g, std::move(support)));
}

std::pair<PiElement, PiElement> refine_to_antichain(const PiElement& a, const PiElement& b) {
    require_same_module(a, b);
    const Graph& g = a.module()->rep().graph;
    std::set<Path> support;
    for (const auto& [p, x] : a.terms()) support.insert(p);
    for (const auto& [p, x] : b.terms()) support.insert(p);
    std::set<Path> frontier = antichain_closure(g, std::move(support));
    return {expand_to_frontier(a, frontier), expand_to_frontier(b, frontier)};
}

bool pi_eq(const PiElement& a, const PiElement& b) {
    require_same_module(a, b);
    const Rep& r = a.module()->rep();
    const Subspace& k = a.module()->kerj();
    auto [ra, rb] = refine_to_antichain(a, b);
    std::set<Path> leaves;
    for (const auto& [p, x] : ra.terms()) leaves.insert(p);
    for (const auto& [p, x] : rb.terms()) leaves.insert(p);
    for (const Path& p : leaves) {
        int at = path_dst(r.graph, p);
        Mat diff(r.dims[static_cast<size_t>(at)], 1, r.field.zero());
        auto ia = ra.terms().find(p);
        auto ib = rb.terms().find(p);
        if (ia != ra.terms().end()) diff = mat_add(r.field, diff, ia->second);
        if (ib != rb.terms().end()) diff = mat_sub(r.field, diff, ib->second);
        if (mat_is_zero(r.field, diff)) continue;
        if (!in_col_space(r.field, k.basis[static_cast<size_t>(at)], diff)) return false;
    }
    return true;
}

bool pi_is_zero(const PiElement& a) { return pi_eq(a, pi_zero(a.module())); }

PiElement pi_hom_apply(const PiModuleRef& src_mod, const PiModuleRef& dst_mod,
                       const RepHom& theta, const PiElement& w) {
    if (w.module() != src_mod)
        fail(ErrorCode::RepMismatch, "element does not live on the source module");
    const Rep& rs = src_mod->rep();
    const Rep& rd = dst_mod->rep();
    if (!(rs.graph == rd.graph) || rs.field != rd.field)
        fail(ErrorCode::RepMismatch, "source and target modules are incompatible");
    PiElement out(dst_mod);
    for (const auto& [p, x] : w.terms()) {
        int at = path_dst(rs.graph, p);
        out.add_term(p, mat_mul(rs.field, theta.blocks[static_cast<size_t>(at)], x));
    }
    return out;
}

// ---------------------------------------------------------------------------
// sampling and the relation harness

PiElement random_pi_element(const PiModuleRef& mod, std::mt19937_64& rng, int max_terms,
                            int max_len) {
    const Rep& r = mod->rep();
    PiElement out(mod);
    if (r.graph.num_vertices() == 0) return out;
    int nterms = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_terms)));
    for (int t = 0; t < nterms; ++t) {
        Path p;
        p.origin = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(r.graph.num_vertices())));
        int len = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_len) + 1));
        int at = p.origin;
        for (int i = 0; i < len && !r.graph.is_sink(at); ++i) {
            const auto& outs = r.graph.out_edges(at);
            int e = outs[rng_below(rng, outs.size())];
            p.edges.push_back(e);
            at = r.graph.dst(e);
        }
        Mat v(r.dims[static_cast<size_t>(at)], 1, r.field.zero());
        for (int i = 0; i < v.rows(); ++i) v.at(i, 0) = r.field.sample(rng);
        out.add_term(p, v);
    }
    return out;
}

namespace {

struct Harness {
    const PiModuleRef& mod;
    RelationReport& rep;
    const PiElement* current = nullptr;

    bool check(bool cond, const std::string& what) {
        ++rep.checks;
        if (!cond && rep.ok) {
            rep.ok = false;
            rep.failure = what;
            if (current) rep.failure += " on element " + pi_to_string(*current);
        }
        return cond;
    }
};

} // namespace

RelationReport verify_relations(const PiModuleRef& mod, int samples, std::uint64_t seed) {
    RelationReport report;
    Harness h{mod, report};
    const Rep& r = mod->rep();
    const Graph& g = r.graph;
    const FieldCtx& f = r.field;
    std::mt19937_64 rng(seed);

    for (int s = 0; s < samples && report.ok; ++s) {
        PiElement w = random_pi_element(mod, rng);
        h.current = &w;

        // (E0) vertex orthogonality: w·(nu om) = delta w·nu
        for (int nu = 0; nu < g.num_vertices() && report.ok; ++nu)
            for (int om = 0; om < g.num_vertices() && report.ok; ++om) {
                PiElement lhs = act_vertex(act_vertex(w, nu), om);
                PiElement rhs = nu == om ? act_vertex(w, nu) : pi_zero(mod);
                h.check(pi_eq(lhs, rhs), "E0 fails at (" + g.vertex_name(nu) + "," + g.vertex_name(om) + ")");
            }

        // (E1) s(e)e = e = e r(e)
        for (int e = 0; e < g.num_edges() && report.ok; ++e) {
            PiElement we = act_edge(w, e);
            h.check(pi_eq(act_edge(act_vertex(w, g.src(e)), e), we),
                    "E1 source identity fails at " + g.edge_name(e));
            h.check(pi_eq(act_vertex(we, g.dst(e)), we),
                    "E1 range identity fails at " + g.edge_name(e));
        }

        // (CK1) (w·e*)·f = delta_{e,f} w·r(e)
        for (int e = 0; e < g.num_edges() && report.ok; ++e)
            for (int fe = 0; fe < g.num_edges() && report.ok; ++fe) {
                PiElement lhs = act_edge(act_edge_star(w, e), fe);
                PiElement rhs = e == fe ? act_vertex(w, g.dst(e)) : pi_zero(mod);
                h.check(pi_eq(lhs, rhs), "CK1 fails at (" + g.edge_name(e) + "," + g.edge_name(fe) + ")");
            }

        // (CK2) sum over outgoing edges, regular vertices only
        for (int nu = 0; nu < g.num_vertices() && report.ok; ++nu) {
            if (g.is_sink(nu)) continue;
            PiElement acc = pi_zero(mod);
            for (int e : g.out_edges(nu)) acc = pi_add(acc, act_edge_star(act_edge(w, e), e));
            h.check(pi_eq(acc, act_vertex(w, nu)), "CK2 fails at " + g.vertex_name(nu));
        }

        // iterated CK2: sum over q in E^n of (w·q)·q* = w, n <= 3
        for (int n = 0; n <= 3 && report.ok; ++n) {
            PiElement acc = pi_zero(mod);
            for (const Path& q : paths_E(g, n)) {
                LMonomial m{f.one(), q, q};
                acc = pi_add(acc, act_monomial(w, m));
            }
            h.check(pi_eq(acc, w), "iterated CK2 fails at depth " + std::to_string(n));
        }

        // [p,x] = [rp,x]·p* on one random term of w
        if (report.ok && !w.terms().empty()) {
            const auto& [p, x] = *w.terms().begin();
            PiElement lhs = pi_make(mod, {{p, x}});
            LMonomial m{f.one(), Path{path_dst(g, p), {}}, p};
            PiElement rhs = act_monomial(j_embed(mod, path_dst(g, p), x), m);
            h.check(pi_eq(lhs, rhs), "q*-action identity fails");
        }
    }
    return report;
}

std::string pi_to_string(const PiElement& a) {
    const Rep& r = a.module()->rep();
    if (a.terms().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, x] : a.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "[" << path_to_string(r.graph, p) << ", " << mat_to_string(r.field, x) << "]";
    }
    return os.str();
}

} // namespace lpa
