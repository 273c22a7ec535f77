#include "nof/rs_graphs.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "nof/closure.hpp"

namespace nof {

TripartiteGraph build_tripartite(const GraphFunctionTable& f) {
  if (f.k != 3) throw GraphError("build_tripartite needs k=3; use build_hypergraph");
  if (validate_table(f) == TableKind::GraphFunction) {
    throw GraphError("build_tripartite needs a linjection");
  }
  TripartiteGraph g;
  g.n = f.n;
  g.N = f.N;
  for (int x = 0; x < f.n; ++x) {
    for (int y = 0; y < f.n; ++y) {
      g.rc.insert({x, y});
      const int b = f.value({x, y});
      g.rw.insert({x, b});
      g.cw.insert({y, b});
    }
  }
  return g;
}

std::pair<TriangleFamily, TriangleFamily> enumerate_triangles(
    const TripartiteGraph& g, const GraphFunctionTable& f) {
  TriangleFamily trivial, nontrivial;
  for (int x = 0; x < g.n; ++x) {
    for (int y = 0; y < g.n; ++y) {
      if (!g.rc.count({x, y})) continue;
      for (int b = 0; b < g.N; ++b) {
        if (!g.rw.count({x, b}) || !g.cw.count({y, b})) continue;
        (f.value({x, y}) == b ? trivial : nontrivial).push_back({x, y, b});
      }
    }
  }
  return {trivial, nontrivial};
}

TriangleFamily triangles_of(const PointSet& S) {
  TriangleFamily t;
  for (const Coords& p : S.points) t.push_back({p[0], p[1], p[2]});
  return t;
}

PointSet points_of(const TriangleFamily& t, Dims dims) {
  PointSet S(dims);
  for (const Triangle& tri : t) S.insert({tri.x, tri.y, tri.b});
  return S;
}

std::vector<Star> g_stars(const TriangleFamily& t) {
  int n = 0, N = 0;
  for (const Triangle& tri : t) {
    n = std::max({n, tri.x + 1, tri.y + 1});
    N = std::max(N, tri.b + 1);
  }
  PointSet S(Dims{3, n, N});
  for (const Triangle& tri : t) S.insert({tri.x, tri.y, tri.b});
  return find_stars(S);
}

MatchingFamily starfree_to_matchings(const PointSet& S) {
  if (S.dims.k != 3) throw GraphError("starfree_to_matchings needs k=3");
  if (!is_star_free(S)) throw GraphError("set contains a star");
  if (!meets_lines_at_most_once(S)) throw GraphError("set meets a line twice");

  std::map<int, std::vector<std::pair<int, int>>> by_value;
  for (const Coords& p : S.points) by_value[p[2]].push_back({p[0], p[1]});

  MatchingFamily m;
  m.rows = S.dims.n;
  m.cols = S.dims.n;
  for (auto& [b, edges] : by_value) m.classes.push_back(std::move(edges));
  if (!is_induced_family(m)) {
    throw GraphError("value classes are not induced in the edge host");
  }
  return m;
}

PointSet matchings_to_starfree(const MatchingFamily& m) {
  PointSet S(Dims{3, std::max(m.rows, m.cols),
                  std::max(1, static_cast<int>(m.classes.size()))});
  for (size_t j = 0; j < m.classes.size(); ++j) {
    for (const auto& [x, y] : m.classes[j]) S.insert({x, y, static_cast<int>(j)});
  }
  if (!is_star_free(S)) throw GraphError("matchings do not reconstruct a star-free set");
  return S;
}

bool is_induced_family(const MatchingFamily& m, bool complete_host) {
  std::set<std::pair<int, int>> host;
  for (const auto& cls : m.classes) {
    std::set<std::pair<int, int>> seen;
    std::set<int> rows, cols;
    for (const auto& e : cls) {
      if (!seen.insert(e).second) return false;  // duplicate edge in a class
      if (!rows.insert(e.first).second || !cols.insert(e.second).second) {
        return false;  // not a matching
      }
      if (!complete_host && !host.insert(e).second) {
        return false;  // classes share an edge
      }
    }
  }
  auto in_host = [&](int x, int y) {
    return complete_host || host.count({x, y}) > 0;
  };
  for (const auto& cls : m.classes) {
    for (size_t i = 0; i < cls.size(); ++i) {
      for (size_t j = i + 1; j < cls.size(); ++j) {
        if (in_host(cls[i].first, cls[j].second) || in_host(cls[j].first, cls[i].second)) {
          return false;
        }
      }
    }
  }
  return true;
}

MatchingFamily rs_from_matchings(const MatchingFamily& m, int r, long long t) {
  if (r < 1) throw GraphError("rs_from_matchings: r >= 1 required");
  if (m.edge_count() < r * t) {
    throw GraphError("insufficient edge mass: total < r*t");
  }
  MatchingFamily out;
  out.rows = m.rows;
  out.cols = m.cols;
  const int half = (r + 1) / 2;  // ceil(r/2): every piece must reach r/2 edges
  for (const auto& cls : m.classes) {
    const int s = static_cast<int>(cls.size());
    int q = std::min(2 * s / r, s / half);
    if (q < 1) continue;
    // Spread s edges over q pieces as evenly as possible.
    int at = 0;
    for (int piece = 0; piece < q; ++piece) {
      const int take = s / q + (piece < s % q ? 1 : 0);
      out.classes.emplace_back(cls.begin() + at, cls.begin() + at + take);
      at += take;
    }
  }
  return out;
}

MatchingFamily matchings_from_rs(const RsGraph& g, uint64_t seed) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& cls : g.classes) {
    for (const auto& e : cls) {
      if (e.first < 0 || e.first >= g.vertices || e.second < 0 ||
          e.second >= g.vertices || e.first == e.second) {
        throw GraphError("bad edge in rs graph");
      }
      edges.push_back(e);
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<char> side(g.vertices);
  for (int v = 0; v < g.vertices; ++v) side[v] = static_cast<char>(rng() & 1);

  std::vector<std::vector<int>> incident(g.vertices);
  for (size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].first].push_back(static_cast<int>(i));
    incident[edges[i].second].push_back(static_cast<int>(i));
  }
  // Switch any vertex whose flip gains cut edges; terminates because the cut
  // size strictly increases. At the fixpoint the cut holds >= |E|/2 edges.
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < g.vertices; ++v) {
      int gain = 0;
      for (int ei : incident[v]) {
        const auto& [a, b] = edges[ei];
        gain += (side[a] != side[b]) ? -1 : 1;
      }
      if (gain > 0) {
        side[v] = !side[v];
        improved = true;
      }
    }
  }

  MatchingFamily out;
  out.rows = g.vertices;
  out.cols = g.vertices;
  for (const auto& cls : g.classes) {
    std::vector<std::pair<int, int>> kept;
    for (const auto& [a, b] : cls) {
      if (side[a] == side[b]) continue;
      kept.push_back(side[a] == 0 ? std::make_pair(a, b) : std::make_pair(b, a));
    }
    if (!kept.empty()) out.classes.push_back(std::move(kept));
  }
  return out;
}

Hypergraph build_hypergraph(const GraphFunctionTable& f) {
  if (f.k < 3) throw GraphError("build_hypergraph needs k >= 3");
  if (validate_table(f) == TableKind::GraphFunction) {
    throw GraphError("build_hypergraph needs a linjection");
  }
  Hypergraph h;
  h.k = f.k;
  h.n = f.n;
  h.N = f.N;
  const int W = f.k - 1;
  for (long long idx = 0; idx < f.cell_count(); ++idx) {
    const Coords cell = f.cell_of_index(idx);
    const int b = f.value(cell);
    // Complete (k-1)-partite edge on the Q parts.
    std::vector<std::pair<int, int>> q_edge;
    for (int i = 0; i < f.k - 1; ++i) q_edge.push_back({i, cell[i]});
    h.edges.insert(q_edge);
    // Value-incidence edges: drop one Q coordinate, add the value vertex.
    for (int skip = 0; skip < f.k - 1; ++skip) {
      std::vector<std::pair<int, int>> edge;
      for (int i = 0; i < f.k - 1; ++i) {
        if (i != skip) edge.push_back({i, cell[i]});
      }
      edge.push_back({W, b});
      h.edges.insert(edge);
    }
  }
  return h;
}

std::pair<std::vector<Coords>, std::vector<Coords>> hypergraph_cliques(
    const Hypergraph& h, const GraphFunctionTable& f) {
  std::vector<Coords> trivial, nontrivial;
  const int W = h.k - 1;
  Coords tuple(h.k, 0);
  while (true) {
    bool clique = true;
    for (int skip = 0; skip < h.k && clique; ++skip) {
      std::vector<std::pair<int, int>> edge;
      for (int i = 0; i < h.k; ++i) {
        if (i != skip) edge.push_back({i == W ? W : i, tuple[i]});
      }
      if (!h.edges.count(edge)) clique = false;
    }
    if (clique) {
      Coords cell(tuple.begin(), tuple.end() - 1);
      (f.value(cell) == tuple[W] ? trivial : nontrivial).push_back(tuple);
    }
    int axis = h.k - 1;
    while (axis >= 0 && ++tuple[axis] >= (axis == W ? h.N : h.n)) tuple[axis--] = 0;
    if (axis < 0) break;
  }
  return {trivial, nontrivial};
}

std::vector<Star> h_stars(const std::vector<Coords>& cliques, Dims dims) {
  PointSet S(dims);
  for (const Coords& c : cliques) S.insert(c);
  return find_stars(S);
}

std::vector<ScheduleRow> channel_schedule(const std::vector<MatchingFamily>& partition) {
  std::set<std::pair<int, int>> seen;
  for (const MatchingFamily& fam : partition) {
    if (!is_induced_family(fam)) throw GraphError("family is not an induced matching family");
    for (const auto& cls : fam.classes) {
      for (const auto& e : cls) {
        if (!seen.insert(e).second) throw GraphError("families do not partition the edges");
      }
    }
  }

  std::vector<ScheduleRow> rows;
  for (size_t fi = 0; fi < partition.size(); ++fi) {
    const MatchingFamily& fam = partition[fi];
    for (size_t round = 0; round < fam.classes.size(); ++round) {
      std::set<int> receivers;
      for (const auto& [sender, receiver] : fam.classes[round]) {
        if (!receivers.insert(receiver).second) {
          throw GraphError("collision: receiver " + std::to_string(receiver) +
                           " hears two messages in round " + std::to_string(round));
        }
        rows.push_back({static_cast<int>(fi), static_cast<int>(round), sender, receiver});
      }
    }
  }
  return rows;
}

}  // namespace nof
