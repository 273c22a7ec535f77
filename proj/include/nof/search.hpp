#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "nof/table.hpp"

namespace nof {

constexpr long long kDefaultNodeBudget = 10'000'000;

struct SearchResult {
  PointSet witness;
  long long value = 0;
  bool exhaustive = false;
  long long nodes = 0;
};

// Maximum star-free subset of f^-1(1) (alpha_k(f)), by branch and bound over
// the accepted points. Budget exhaustion returns the incumbent with
// exhaustive=false. The witness is re-verified by an independent star scan.
SearchResult alpha_exact(const GraphFunctionTable& f,
                         long long budget = kDefaultNodeBudget);

// Maximum star-free subset of [n]^{k-1} x [N] meeting every line at most once
// (alpha-bar_k(n, N)).
SearchResult alpha_bar_exact(int n, int N, int k = 3,
                             long long budget = kDefaultNodeBudget);

// Greedy completion of a line-respecting partial table into a linjection:
// row-major cell order, smallest admissible value. Throws
// TableValidationError naming the first stuck cell.
GraphFunctionTable extend_to_linjection(const PointSet& S, int n, int N);

// A forbidden pattern over Z_q^arity, evaluated coordinatewise on tuples of
// distinct vectors.
struct XPattern {
  int q = 0;
  int arity = 3;
  std::set<std::vector<int>> tuples;
};

struct XFreeResult {
  std::vector<std::vector<int>> witness;  // vectors over Z_q^n
  long long value = 0;
  bool exhaustive = false;
  long long nodes = 0;
};

// Maximum W in Z_q^n such that every tuple of pairwise-distinct members of W
// has some coordinate whose value tuple avoids X.
XFreeResult xfree_max(const XPattern& X, int n,
                      long long budget = kDefaultNodeBudget);

// Entry-wise psi: (0,0)->0, (0,1)->1, (1,0)->2, (1,1)->3.
std::vector<int> psi_map(const std::vector<int>& a, const std::vector<int>& b);
std::pair<std::vector<int>, std::vector<int>> psi_inverse(const std::vector<int>& v);

// Named patterns: "theorem19", "hales-jewett" (param s), "capset" (param q).
XPattern xpattern_catalog(const std::string& name, int param = 0);

}  // namespace nof
