#pragma once

#include <string>

#include <json.hpp>

#include "nof/bounds.hpp"
#include "nof/covers.hpp"
#include "nof/protocol.hpp"
#include "nof/rs_graphs.hpp"
#include "nof/search.hpp"
#include "nof/table.hpp"

namespace nof {

using json = nlohmann::json;

json table_to_json(const GraphFunctionTable& t);
GraphFunctionTable table_from_json(const json& j);

json pointset_to_json(const PointSet& s);
PointSet pointset_from_json(const json& j);

json transcript_to_json(const Transcript& t);

json cover_to_json(const Cover& c, Dims dims);
Cover cover_from_json(const json& j);

json tripartite_to_json(const TripartiteGraph& g);

// Witness file: PointSet fields plus {"quantity","exhaustive","value"}.
json witness_to_json(const std::string& quantity, const SearchResult& r);

json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

json trace_to_json(const ExtractionTrace& t);
json bound_report_to_json(const BoundReport& r);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace nof
