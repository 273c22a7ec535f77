#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "nof/table.hpp"

namespace nof {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// G(A): parts R, C of size n and W of size N, edges between distinct parts.
struct TripartiteGraph {
  int n = 0;
  int N = 0;
  std::set<std::pair<int, int>> rc, rw, cw;
};

struct Triangle {
  int x = 0, y = 0, b = 0;
  auto operator<=>(const Triangle&) const = default;
};
using TriangleFamily = std::vector<Triangle>;

// Classes of edges in a bipartite rows x cols host. The implicit host graph
// is the union of all classes unless complete_host is set.
struct MatchingFamily {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> classes;

  long long edge_count() const {
    long long e = 0;
    for (const auto& c : classes) e += static_cast<long long>(c.size());
    return e;
  }
};

// H(A): parts Q_1..Q_{k-1} of size n and W of size N; (k-1)-uniform
// hyperedges over vertices labeled (part, index), part k-1 being W.
struct Hypergraph {
  int k = 3;
  int n = 0;
  int N = 0;
  std::set<std::vector<std::pair<int, int>>> edges;  // sorted (part, vertex)
};

// An undirected graph whose edges are partitioned into matchings, for the
// Ruzsa-Szemeredi cut construction.
struct RsGraph {
  int vertices = 0;
  std::vector<std::vector<std::pair<int, int>>> classes;
};

TripartiteGraph build_tripartite(const GraphFunctionTable& f);

// Full triangle census of G, split by A(x, y) = b.
std::pair<TriangleFamily, TriangleFamily> enumerate_triangles(
    const TripartiteGraph& g, const GraphFunctionTable& f);

// Triples of family members forming the G-star pattern
// <x,y,b'>, <x',y,b>, <x,y',b> around a center <x,y,b>.
std::vector<Star> g_stars(const TriangleFamily& t);

// Triangles of the accepted points of a point set (Theorem 14 forward map).
TriangleFamily triangles_of(const PointSet& S);
PointSet points_of(const TriangleFamily& t, Dims dims);

// Group a star-free line-respecting set's cells by value; each class is an
// induced matching in the host formed by the set's own edges.
MatchingFamily starfree_to_matchings(const PointSet& S);
PointSet matchings_to_starfree(const MatchingFamily& m);

// True when every class is a matching and no host edge joins two distinct
// edges of the same class. Host = union of classes, or the complete
// bipartite graph when complete_host is set.
bool is_induced_family(const MatchingFamily& m, bool complete_host = false);

// Lemma 17.2: split each matching into floor(2|M_i|/r) pieces of >= r/2
// edges. Throws when the total edge mass is below r*t.
MatchingFamily rs_from_matchings(const MatchingFamily& m, int r, long long t = 0);

// Lemma 17.1: bipartition the vertices keeping >= |E|/2 cut edges (greedy
// local switching from a seeded start) and restrict every matching to the
// cut. Edges come back as (left vertex, right vertex) in original labels.
MatchingFamily matchings_from_rs(const RsGraph& g, uint64_t seed = 0);

Hypergraph build_hypergraph(const GraphFunctionTable& f);

// All k-vertex cliques (one vertex per part, every (k-1)-subset an edge),
// split by A(cell) = b.
std::pair<std::vector<Coords>, std::vector<Coords>> hypergraph_cliques(
    const Hypergraph& h, const GraphFunctionTable& f);

std::vector<Star> h_stars(const std::vector<Coords>& cliques, Dims dims);

struct ScheduleRow {
  int family = 0;
  int round = 0;
  int sender = 0;
  int receiver = 0;
};

// One round per matching class per family; asserts no receiver hears two
// concurrent messages in any round.
std::vector<ScheduleRow> channel_schedule(const std::vector<MatchingFamily>& partition);

}  // namespace nof
