#include "lpa/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lpa {

Graph Graph::make(const std::vector<std::string>& vertices,
                  const std::vector<EdgeSpec>& edges) {
    Graph g;
    std::map<std::string, int> vidx, eidx;
    for (const auto& v : vertices) {
        if (vidx.count(v)) fail(ErrorCode::ParseError, "duplicate vertex '" + v + "'");
        vidx[v] = static_cast<int>(g.vnames_.size());
        g.vnames_.push_back(v);
    }
    g.out_.resize(g.vnames_.size());
    for (const auto& e : edges) {
        if (eidx.count(e.name)) fail(ErrorCode::ParseError, "duplicate edge '" + e.name + "'");
        auto si = vidx.find(e.src);
        auto di = vidx.find(e.dst);
        if (si == vidx.end())
            fail(ErrorCode::UnknownVertex, "edge '" + e.name + "' has undeclared source '" + e.src + "'");
        if (di == vidx.end())
            fail(ErrorCode::UnknownVertex, "edge '" + e.name + "' has undeclared target '" + e.dst + "'");
        eidx[e.name] = static_cast<int>(g.enames_.size());
        g.enames_.push_back(e.name);
        g.esrc_.push_back(si->second);
        g.edst_.push_back(di->second);
        g.out_[static_cast<size_t>(si->second)].push_back(static_cast<int>(g.enames_.size()) - 1);
    }
    return g;
}

Graph Graph::bouquet(int n) {
    std::vector<EdgeSpec> es;
    for (int i = 1; i <= n; ++i) es.push_back({"e" + std::to_string(i), "v", "v"});
    return make({"v"}, es);
}

Graph Graph::line(int n) {
    std::vector<std::string> vs;
    std::vector<EdgeSpec> es;
    for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    for (int i = 1; i < n; ++i)
        es.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1)});
    return make(vs, es);
}

Graph Graph::circle(int n) {
    std::vector<std::string> vs;
    std::vector<EdgeSpec> es;
    for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    for (int i = 1; i < n; ++i)
        es.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1)});
    es.push_back({"e" + std::to_string(n), "v" + std::to_string(n), "v1"});
    return make(vs, es);
}

int Graph::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vnames_.size(); ++i)
        if (vnames_[i] == name) return static_cast<int>(i);
    fail(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
}

int Graph::edge_index(const std::string& name) const {
    for (size_t i = 0; i < enames_.size(); ++i)
        if (enames_[i] == name) return static_cast<int>(i);
    fail(ErrorCode::UnknownEdge, "unknown edge '" + name + "'");
}

VertexClass classify_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.num_vertices()) fail(ErrorCode::UnknownVertex, "vertex index out of range");
    return g.is_sink(v) ? VertexClass::Sink : VertexClass::Regular;
}

bool path_valid(const Graph& g, const Path& p) {
    if (p.origin < 0 || p.origin >= g.num_vertices()) return false;
    int at = p.origin;
    for (int e : p.edges) {
        if (e < 0 || e >= g.num_edges()) return false;
        if (g.src(e) != at) return false;
        at = g.dst(e);
    }
    return true;
}

void require_path(const Graph& g, const Path& p) {
    if (!path_valid(g, p)) fail(ErrorCode::UnknownVertex, "not a path in the graph");
}

int path_dst(const Graph& g, const Path& p) {
    return p.edges.empty() ? p.origin : g.dst(p.edges.back());
}

std::string path_to_string(const Graph& g, const Path& p) {
    if (p.edges.empty()) return g.vertex_name(p.origin);
    std::ostringstream os;
    for (size_t i = 0; i < p.edges.size(); ++i)
        os << (i ? "." : "") << g.edge_name(p.edges[i]);
    return os.str();
}

bool path_is_prefix(const Path& a, const Path& b) {
    if (a.origin != b.origin || a.edges.size() > b.edges.size()) return false;
    return std::equal(a.edges.begin(), a.edges.end(), b.edges.begin());
}

static void paths_E_rec(const Graph& g, const Path& cur, int at, int k,
                        std::vector<Path>& out) {
    if (cur.length() == k || (cur.length() < k && g.is_sink(at))) {
        out.push_back(cur);
        return;
    }
    for (int e : g.out_edges(at)) {
        Path next = cur;
        next.edges.push_back(e);
        paths_E_rec(g, next, g.dst(e), k, out);
    }
}

std::vector<Path> paths_E(const Graph& g, int k, std::optional<int> source) {
    if (k < 0) fail(ErrorCode::ParseError, "paths_E: negative length");
    std::vector<Path> out;
    if (source) {
        if (*source < 0 || *source >= g.num_vertices())
            fail(ErrorCode::UnknownVertex, "paths_E: source out of range");
        paths_E_rec(g, Path{*source, {}}, *source, k, out);
    } else {
        for (int v = 0; v < g.num_vertices(); ++v)
            paths_E_rec(g, Path{v, {}}, v, k, out);
    }
    return out;
}

bool is_cycle(const Graph& g, const Path& c) {
    return path_valid(g, c) && c.length() >= 1 && path_dst(g, c) == c.origin;
}

void require_cycle(const Graph& g, const Path& c) {
    if (!is_cycle(g, c)) fail(ErrorCode::NotACycle, "not a cycle");
}

bool is_prime_cycle(const Graph& g, const Path& c) {
    require_cycle(g, c);
    int n = c.length();
    for (int len = 1; len < n; ++len) {
        if (n % len != 0) continue;
        bool power = true;
        for (int i = 0; i < n && power; ++i)
            if (c.edges[static_cast<size_t>(i)] != c.edges[static_cast<size_t>(i % len)]) power = false;
        if (power) return false;
    }
    return true;
}

Path cycle_rotation_class(const Graph& g, const Path& c) {
    require_cycle(g, c);
    int n = c.length();
    Path best = c;
    for (int r = 1; r < n; ++r) {
        Path rot;
        rot.edges.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) rot.edges.push_back(c.edges[static_cast<size_t>((r + i) % n)]);
        rot.origin = g.src(rot.edges[0]);
        if (rot.edges < best.edges) best = rot;
    }
    return best;
}

} // namespace lpa
