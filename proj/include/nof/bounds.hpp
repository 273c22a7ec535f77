#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "nof/covers.hpp"
#include "nof/table.hpp"

namespace nof {

// Color per accepted point, indexed by the point's cell index in the table.
struct Coloring {
  int colors = 0;
  std::vector<int> assignment;  // cell index -> color in [colors]
};

struct ChiResult {
  long long value = 0;
  Coloring coloring;
  bool exhaustive = false;
  long long nodes = 0;
};

// Minimum number of star-free classes partitioning f^-1(1): iterative
// deepening over the class count, points assigned in order with class-order
// symmetry breaking. Witness re-verified per class.
ChiResult chi_exact(const GraphFunctionTable& f, long long budget = 10'000'000);

Coloring coloring_from_cover(const GraphFunctionTable& f, const Cover& c);

struct ChiUpperBound {
  long long bound = 0;            // ceil(2 k |G|^{k-1} ln|G| / alpha)
  long long patch_allowance = 0;  // |G|^{k-1}
};
ChiUpperBound chi_upper_from_alpha(const GroupSpec& g, int k, long long alpha);

// One level of the Lemma 37 recursion over a colored k=3 linjection.
struct ExtractionLevel {
  int value = 0;
  int color = 0;
  std::set<Coords> s_cells;            // the monochromatic value class
  std::set<int> rect_rows, rect_cols;  // R_i
};

struct ExtractionTrace {
  std::vector<ExtractionLevel> levels;
};

// Runs the recursion and checks every per-level inequality and rectangle
// invariant; throws std::logic_error naming the level on any violation.
ExtractionTrace lemma37_extract(const GraphFunctionTable& f, const Coloring& c);

struct BoundReport {
  long long n = 0, N = 0, L = 0;
  bool lemma37_holds = false;     // n^(2^(L+1)) < (4NL)^(2^(L+1)-1)
  bool corollary38_holds = false; // (4LN)^(2^L - 1) >= n^(2^L)
};

// Exact integer evaluation of both inequalities.
BoundReport bound_checks(long long n, long long N, long long L);

// Least L >= 1 passing Lemma 37's inequality for (n, N).
long long least_l(long long n, long long N);

// (|S|, |closure_min(S)|); requires S line-respecting.
std::pair<long long, long long> closure_stats(const PointSet& S);

}  // namespace nof
