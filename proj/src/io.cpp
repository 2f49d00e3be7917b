#include "lpa/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace lpa {

namespace fs = std::filesystem;

json graph_to_json(const Graph& g) {
    json vertices = json::array();
    for (int v = 0; v < g.num_vertices(); ++v) vertices.push_back(g.vertex_name(v));
    json edges = json::array();
    for (int e = 0; e < g.num_edges(); ++e)
        edges.push_back({{"name", g.edge_name(e)},
                         {"src", g.vertex_name(g.src(e))},
                         {"dst", g.vertex_name(g.dst(e))}});
    return {{"vertices", vertices}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        fail(ErrorCode::ParseError, "graph JSON requires 'vertices' and 'edges'");
    std::vector<std::string> vs;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) fail(ErrorCode::ParseError, "vertex names must be strings");
        vs.push_back(v.get<std::string>());
    }
    std::vector<Graph::EdgeSpec> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_object() || !e.contains("name") || !e.contains("src") || !e.contains("dst"))
            fail(ErrorCode::ParseError, "edge entries require name/src/dst");
        es.push_back({e.at("name").get<std::string>(), e.at("src").get<std::string>(),
                      e.at("dst").get<std::string>()});
    }
    return Graph::make(vs, es);
}

json field_to_json(const FieldCtx& f) {
    if (f.kind() == FieldKind::Rationals) return {{"kind", "Q"}};
    return {{"kind", "Fp"}, {"p", f.p()}};
}

FieldCtx field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        fail(ErrorCode::ParseError, "field JSON requires 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldCtx::rationals();
    if (kind == "Fp") {
        if (!j.contains("p")) fail(ErrorCode::ParseError, "prime field requires 'p'");
        return FieldCtx::prime_field(j.at("p").get<std::int64_t>());
    }
    fail(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
}

json mat_to_json(const FieldCtx& f, const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(f.to_string(m.at(i, j2)));
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_json(const FieldCtx& f, const json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        fail(ErrorCode::ParseError,
             "matrix JSON has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    Mat m(rows, cols, f.zero());
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            fail(ErrorCode::ParseError, "matrix row " + std::to_string(i) + " has wrong length");
        for (int c = 0; c < cols; ++c) {
            const json& cell = row.at(static_cast<size_t>(c));
            if (cell.is_string())
                m.at(i, c) = f.parse(cell.get<std::string>());
            else if (cell.is_number_integer())
                m.at(i, c) = f.from_int(cell.get<std::int64_t>());
            else
                fail(ErrorCode::ParseError, "matrix entries must be strings or integers");
        }
    }
    return m;
}

json rep_to_json(const Rep& r) {
    json dims = json::object();
    for (int v = 0; v < r.graph.num_vertices(); ++v)
        dims[r.graph.vertex_name(v)] = r.dims[static_cast<size_t>(v)];
    json mats = json::object();
    for (int e = 0; e < r.graph.num_edges(); ++e)
        mats[r.graph.edge_name(e)] = mat_to_json(r.field, r.mats[static_cast<size_t>(e)]);
    return {{"graph", graph_to_json(r.graph)},
            {"field", field_to_json(r.field)},
            {"dims", dims},
            {"matrices", mats}};
}

Rep rep_from_json(const json& j, const std::string& base_dir) {
    if (!j.is_object()) fail(ErrorCode::ParseError, "rep JSON must be an object");
    for (const char* key : {"graph", "field", "dims", "matrices"})
        if (!j.contains(key))
            fail(ErrorCode::ParseError, std::string("rep JSON requires '") + key + "'");
    Graph g;
    const json& gj = j.at("graph");
    if (gj.is_string()) {
        fs::path p = fs::path(gj.get<std::string>());
        if (p.is_relative()) p = fs::path(base_dir) / p;
        g = graph_from_json(load_json_file(p.string()));
    } else {
        g = graph_from_json(gj);
    }
    FieldCtx f = field_from_json(j.at("field"));
    DimVector dims(static_cast<size_t>(g.num_vertices()), 0);
    for (const auto& [name, val] : j.at("dims").items()) {
        int v = g.vertex_index(name);
        if (!val.is_number_integer() || val.get<int>() < 0)
            fail(ErrorCode::ParseError, "dimension at '" + name + "' must be a nonnegative integer");
        dims[static_cast<size_t>(v)] = val.get<int>();
    }
    std::vector<Mat> mats;
    for (int e = 0; e < g.num_edges(); ++e)
        mats.push_back(Mat(dims[static_cast<size_t>(g.dst(e))],
                           dims[static_cast<size_t>(g.src(e))], f.zero()));
    for (const auto& [name, val] : j.at("matrices").items()) {
        int e = g.edge_index(name);
        mats[static_cast<size_t>(e)] =
            mat_from_json(f, val, dims[static_cast<size_t>(g.dst(e))],
                          dims[static_cast<size_t>(g.src(e))]);
    }
    return make_rep(std::move(g), f, std::move(dims), std::move(mats));
}

json path_to_json(const Graph& g, const Path& p) {
    json edges = json::array();
    for (int e : p.edges) edges.push_back(g.edge_name(e));
    return {{"origin", g.vertex_name(p.origin)}, {"edges", edges}};
}

Path path_from_json(const Graph& g, const json& j) {
    if (!j.is_object() || !j.contains("origin"))
        fail(ErrorCode::ParseError, "path JSON requires 'origin'");
    Path p;
    p.origin = g.vertex_index(j.at("origin").get<std::string>());
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) p.edges.push_back(g.edge_index(e.get<std::string>()));
    require_path(g, p);
    return p;
}

json subspace_to_json(const Rep& r, const Subspace& s) {
    json basis = json::object();
    for (int v = 0; v < r.graph.num_vertices(); ++v) {
        const Mat& b = s.basis[static_cast<size_t>(v)];
        json cols = json::array();
        for (int c = 0; c < b.cols(); ++c) {
            json col = json::array();
            for (int i = 0; i < b.rows(); ++i) col.push_back(r.field.to_string(b.at(i, c)));
            cols.push_back(col);
        }
        basis[r.graph.vertex_name(v)] = cols;
    }
    return {{"basis", basis}};
}

json dimvec_to_json(const Graph& g, const DimVector& d) {
    json out = json::object();
    for (int v = 0; v < g.num_vertices(); ++v) out[g.vertex_name(v)] = d[static_cast<size_t>(v)];
    return out;
}

DimVector dimvec_from_json(const Graph& g, const json& j) {
    DimVector d(static_cast<size_t>(g.num_vertices()), 0);
    if (j.is_number_integer()) {
        if (g.num_vertices() != 1)
            fail(ErrorCode::ParseError, "scalar dimension only valid for one-vertex graphs");
        d[0] = j.get<int>();
        return d;
    }
    for (const auto& [name, val] : j.items())
        d[static_cast<size_t>(g.vertex_index(name))] = val.get<int>();
    return d;
}

json pi_element_to_json(const PiElement& e, const std::string& rep_ref) {
    const Rep& r = e.module()->rep();
    json terms = json::array();
    for (const auto& [p, v] : e.terms()) {
        json vec = json::array();
        for (int i = 0; i < v.rows(); ++i) vec.push_back(r.field.to_string(v.at(i, 0)));
        terms.push_back({{"path", path_to_json(r.graph, p)}, {"vector", vec}});
    }
    json out = {{"terms", terms}};
    if (!rep_ref.empty()) out["rep"] = rep_ref;
    return out;
}

PiElement pi_element_from_json(const PiModuleRef& mod, const json& j) {
    if (!j.is_object() || !j.contains("terms"))
        fail(ErrorCode::ParseError, "element JSON requires 'terms'");
    const Rep& r = mod->rep();
    PiElement out(mod);
    for (const auto& t : j.at("terms")) {
        if (!t.contains("path") || !t.contains("vector"))
            fail(ErrorCode::ParseError, "element terms require 'path' and 'vector'");
        Path p = path_from_json(r.graph, t.at("path"));
        int at = path_dst(r.graph, p);
        const json& vj = t.at("vector");
        if (static_cast<int>(vj.size()) != r.dims[static_cast<size_t>(at)])
            fail(ErrorCode::ParseError, "term vector length does not match the destination vertex");
        Mat v(r.dims[static_cast<size_t>(at)], 1, r.field.zero());
        for (int i = 0; i < v.rows(); ++i) v.at(i, 0) = r.field.parse(vj.at(static_cast<size_t>(i)).get<std::string>());
        out.add_term(p, v);
    }
    return out;
}

LElement lelement_from_json(const Graph& g, const FieldCtx& f, const json& j) {
    if (!j.is_object() || !j.contains("monomials"))
        fail(ErrorCode::ParseError, "operator JSON requires 'monomials'");
    LElement out;
    for (const auto& m : j.at("monomials")) {
        LMonomial mono;
        mono.coeff = m.contains("coeff") ? f.parse(m.at("coeff").get<std::string>()) : f.one();
        if (!m.contains("p") || !m.contains("q"))
            fail(ErrorCode::ParseError, "monomials require 'p' and 'q' paths");
        mono.p = path_from_json(g, m.at("p"));
        mono.q = path_from_json(g, m.at("q"));
        require_monomial(g, mono);
        out.push_back(mono);
    }
    return out;
}

json lelement_to_json(const Graph& g, const FieldCtx& f, const LElement& l) {
    json monos = json::array();
    for (const LMonomial& m : l)
        monos.push_back({{"coeff", f.to_string(m.coeff)},
                         {"p", path_to_json(g, m.p)},
                         {"q", path_to_json(g, m.q)}});
    return {{"monomials", monos}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::ParseError, "JSON parse error in '" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    // write-then-rename so partial output never lands under the final name
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) fail(ErrorCode::ParseError, "cannot open '" + tmp.string() + "' for writing");
        out << j.dump(2) << "\n";
    }
    fs::rename(tmp, target);
}

Rep load_rep_file(const std::string& path) {
    return rep_from_json(load_json_file(path), fs::path(path).parent_path().string());
}

Path parse_edge_list(const Graph& g, const std::string& csv) {
    Path p;
    if (csv.empty()) fail(ErrorCode::ParseError, "empty edge list");
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) p.edges.push_back(g.edge_index(item));
    p.origin = g.src(p.edges[0]);
    require_path(g, p);
    return p;
}

} // namespace lpa
