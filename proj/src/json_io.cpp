#include "nof/json_io.hpp"

#include <fstream>

namespace nof {

json table_to_json(const GraphFunctionTable& t) {
  return json{{"k", t.k}, {"n", t.n}, {"N", t.N}, {"table", t.table}};
}

GraphFunctionTable table_from_json(const json& j) {
  GraphFunctionTable t;
  t.k = j.at("k").get<int>();
  t.n = j.at("n").get<int>();
  t.N = j.at("N").get<int>();
  t.table = j.at("table").get<std::vector<int>>();
  if (static_cast<long long>(t.table.size()) != t.cell_count()) {
    throw TableValidationError("table length does not match n^(k-1)");
  }
  t.kind = validate_table(t);
  return t;
}

json pointset_to_json(const PointSet& s) {
  json pts = json::array();
  for (const Coords& p : s.points) pts.push_back(p);
  return json{{"k", s.dims.k}, {"n", s.dims.n}, {"N", s.dims.N}, {"points", pts}};
}

PointSet pointset_from_json(const json& j) {
  PointSet s(Dims{j.at("k").get<int>(), j.at("n").get<int>(), j.at("N").get<int>()});
  for (const auto& p : j.at("points")) s.insert(p.get<Coords>());
  return s;
}

json transcript_to_json(const Transcript& t) {
  json events = json::array();
  for (const Event& e : t.events) {
    events.push_back(json{{"player", e.player}, {"bits", e.bits}});
  }
  return json{{"events", events}, {"output", t.output}, {"total_bits", t.total_bits}};
}

json cover_to_json(const Cover& c, Dims dims) {
  json classes = json::array();
  for (const PointSet& cls : c.classes) {
    json pts = json::array();
    for (const Coords& p : cls.points) pts.push_back(p);
    classes.push_back(pts);
  }
  return json{{"k", dims.k},
              {"n", dims.n},
              {"N", dims.N},
              {"mode", c.mode == Cover::Mode::Partition ? "partition" : "cover"},
              {"classes", classes}};
}

Cover cover_from_json(const json& j) {
  Cover c;
  c.mode = j.at("mode").get<std::string>() == "partition" ? Cover::Mode::Partition
                                                          : Cover::Mode::Cover;
  const Dims dims{j.at("k").get<int>(), j.at("n").get<int>(), j.at("N").get<int>()};
  for (const auto& cls : j.at("classes")) {
    PointSet s(dims);
    for (const auto& p : cls) s.insert(p.get<Coords>());
    c.classes.push_back(std::move(s));
  }
  return c;
}

json tripartite_to_json(const TripartiteGraph& g) {
  auto edges = [](const std::set<std::pair<int, int>>& es) {
    json out = json::array();
    for (const auto& [a, b] : es) out.push_back(json::array({a, b}));
    return out;
  };
  return json{{"parts", json::array({g.n, g.n, g.N})},
              {"edges", json{{"RC", edges(g.rc)}, {"RW", edges(g.rw)}, {"CW", edges(g.cw)}}}};
}

json witness_to_json(const std::string& quantity, const SearchResult& r) {
  json j = pointset_to_json(r.witness);
  j["quantity"] = quantity;
  j["exhaustive"] = r.exhaustive;
  j["value"] = r.value;
  return j;
}

json coloring_to_json(const Coloring& c) {
  return json{{"colors", c.colors}, {"assignment", c.assignment}};
}

Coloring coloring_from_json(const json& j) {
  Coloring c;
  c.colors = j.at("colors").get<int>();
  c.assignment = j.at("assignment").get<std::vector<int>>();
  return c;
}

json trace_to_json(const ExtractionTrace& t) {
  json levels = json::array();
  for (const ExtractionLevel& lvl : t.levels) {
    json cells = json::array();
    for (const Coords& c : lvl.s_cells) cells.push_back(c);
    levels.push_back(json{{"value", lvl.value},
                          {"color", lvl.color},
                          {"cells", cells},
                          {"rect_rows", lvl.rect_rows},
                          {"rect_cols", lvl.rect_cols}});
  }
  return json{{"levels", levels}};
}

json bound_report_to_json(const BoundReport& r) {
  return json{{"n", r.n},
              {"N", r.N},
              {"L", r.L},
              {"lemma37_holds", r.lemma37_holds},
              {"corollary38_holds", r.corollary38_holds}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace nof
