#ifndef LPA_GRAPH_HPP
#define LPA_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

// Finite directed graph. Finiteness makes row-finiteness automatic; the
// declared vertex/edge order is the canonical total order used by path
// enumeration and cycle canonicalization, so all outputs are deterministic.
class Graph {
public:
    Graph() = default;

    struct EdgeSpec {
        std::string name, src, dst;
    };

    static Graph make(const std::vector<std::string>& vertices,
                      const std::vector<EdgeSpec>& edges);

    // bouquet of n loops at a single vertex "v" with edges "e1".."en"
    static Graph bouquet(int n);
    // n-line graph v1 -> v2 -> ... -> vn
    static Graph line(int n);
    // n-circle graph: the line closed up with an edge vn -> v1
    static Graph circle(int n);

    int num_vertices() const { return static_cast<int>(vnames_.size()); }
    int num_edges() const { return static_cast<int>(enames_.size()); }

    const std::string& vertex_name(int v) const { return vnames_[static_cast<size_t>(v)]; }
    const std::string& edge_name(int e) const { return enames_[static_cast<size_t>(e)]; }
    int src(int e) const { return esrc_[static_cast<size_t>(e)]; }
    int dst(int e) const { return edst_[static_cast<size_t>(e)]; }

    int vertex_index(const std::string& name) const; // UnknownVertex if absent
    int edge_index(const std::string& name) const;   // UnknownEdge if absent

    const std::vector<int>& out_edges(int v) const { return out_[static_cast<size_t>(v)]; }
    bool is_sink(int v) const { return out_[static_cast<size_t>(v)].empty(); }

    bool operator==(const Graph& o) const {
        return vnames_ == o.vnames_ && enames_ == o.enames_ && esrc_ == o.esrc_ &&
               edst_ == o.edst_;
    }

private:
    std::vector<std::string> vnames_, enames_;
    std::vector<int> esrc_, edst_;
    std::vector<std::vector<int>> out_;
};

enum class VertexClass { Sink, Regular };

VertexClass classify_vertex(const Graph& g, int v);

// A path: an origin vertex plus a composable edge list (empty = the vertex
// itself, the length-0 path).
struct Path {
    int origin = 0;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const Path& o) const { return origin == o.origin && edges == o.edges; }
    bool operator<(const Path& o) const {
        if (origin != o.origin) return origin < o.origin;
        return edges < o.edges;
    }
};

bool path_valid(const Graph& g, const Path& p);
void require_path(const Graph& g, const Path& p);
int path_dst(const Graph& g, const Path& p);
std::string path_to_string(const Graph& g, const Path& p);

// is a a proper or improper prefix of b?
bool path_is_prefix(const Path& a, const Path& b);

// E^k: all paths of length exactly k together with the shorter paths that
// terminate at a sink (vertices included as length-0 paths). Optionally
// restricted to a source vertex. Deterministic order: by origin, then
// depth-first in edge order.
std::vector<Path> paths_E(const Graph& g, int k, std::optional<int> source = std::nullopt);

// A cycle is a nonempty path with src = dst. These helpers validate that.
bool is_cycle(const Graph& g, const Path& c);
void require_cycle(const Graph& g, const Path& c);

// true iff c is not a proper power of a shorter cycle
bool is_prime_cycle(const Graph& g, const Path& c);

// Lexicographically minimal rotation under the declared edge order; two
// cycles are rotation-equivalent iff their canonical forms are equal.
Path cycle_rotation_class(const Graph& g, const Path& c);

} // namespace lpa

#endif
