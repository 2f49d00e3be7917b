#ifndef LPA_IO_HPP
#define LPA_IO_HPP

#include <string>

#include <json.hpp>

#include "lpa/pi.hpp"
#include "lpa/rep.hpp"

namespace lpa {

using nlohmann::json;

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json field_to_json(const FieldCtx& f);
FieldCtx field_from_json(const json& j);

json mat_to_json(const FieldCtx& f, const Mat& m); // row-major string entries
Mat mat_from_json(const FieldCtx& f, const json& j, int rows, int cols);

// Rep JSON: graph inline or as a file reference (string path, resolved
// relative to base_dir); dims by vertex name; matrices by edge name with
// shape d_dst x d_src.
json rep_to_json(const Rep& r);
Rep rep_from_json(const json& j, const std::string& base_dir);

json path_to_json(const Graph& g, const Path& p);
Path path_from_json(const Graph& g, const json& j);

json subspace_to_json(const Rep& r, const Subspace& s);

json dimvec_to_json(const Graph& g, const DimVector& d);
DimVector dimvec_from_json(const Graph& g, const json& j);

json pi_element_to_json(const PiElement& e, const std::string& rep_ref = "");
PiElement pi_element_from_json(const PiModuleRef& mod, const json& j);

LElement lelement_from_json(const Graph& g, const FieldCtx& f, const json& j);
json lelement_to_json(const Graph& g, const FieldCtx& f, const LElement& l);

json load_json_file(const std::string& path); // ParseError with position context
void write_json_file(const std::string& path, const json& j);

Rep load_rep_file(const std::string& path);

// comma-separated edge names -> path (origin inferred from the first edge)
Path parse_edge_list(const Graph& g, const std::string& csv);

} // namespace lpa

#endif
