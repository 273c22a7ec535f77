#include "nof/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "nof/closure.hpp"
#include "nof/search.hpp"

namespace nof {

using boost::multiprecision::cpp_int;

namespace {

struct ChiSearch {
  Dims dims;
  std::vector<Coords> pts;
  int L = 0;
  long long budget = 0;

  long long nodes = 0;
  bool out_of_budget = false;
  std::vector<std::vector<Coords>> classes;
  std::vector<int> assign;

  bool dfs(size_t idx) {
    if (out_of_budget) return false;
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (idx == pts.size()) return true;
    const int open = static_cast<int>(classes.size());
    // Existing classes first; at most one fresh class (class-order symmetry).
    const int last = std::min(open, L - 1);
    for (int cl = 0; cl <= last; ++cl) {
      const bool fresh = cl == open;
      if (fresh) {
        classes.emplace_back();
      } else if (completes_star(dims, classes[cl], pts[idx])) {
        continue;
      }
      classes[cl].push_back(pts[idx]);
      assign[idx] = cl;
      if (dfs(idx + 1)) return true;
      classes[cl].pop_back();
      if (fresh) classes.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

ChiResult chi_exact(const GraphFunctionTable& f, long long budget) {
  const PointSet accepted = f.accepted_points();
  std::vector<Coords> pts(accepted.points.begin(), accepted.points.end());

  ChiResult r;
  r.coloring.assignment.assign(f.cell_count(), -1);
  if (pts.empty()) {
    r.exhaustive = true;
    return r;
  }

  const SearchResult alpha = alpha_exact(f, budget);
  const long long P = static_cast<long long>(pts.size());
  long long start = 1;
  if (alpha.exhaustive && alpha.value > 0) start = (P + alpha.value - 1) / alpha.value;

  long long spent = alpha.nodes;
  for (long long L = start; L <= P; ++L) {
    ChiSearch search;
    search.dims = f.dims();
    search.pts = pts;
    search.L = static_cast<int>(L);
    search.budget = budget - spent;
    search.assign.assign(pts.size(), -1);
    const bool found = search.dfs(0);
    spent += search.nodes;
    r.nodes = spent;
    if (found) {
      r.value = static_cast<long long>(search.classes.size());
      r.coloring.colors = static_cast<int>(search.classes.size());
      for (size_t i = 0; i < pts.size(); ++i) {
        const Coords cell(pts[i].begin(), pts[i].end() - 1);
        r.coloring.assignment[f.cell_index(cell)] = search.assign[i];
      }
      r.exhaustive = true;
      // Independent re-check of the witness classes.
      for (int cl = 0; cl < r.coloring.colors; ++cl) {
        PointSet cls(f.dims());
        for (const Coords& p : pts) {
          const Coords cell(p.begin(), p.end() - 1);
          if (r.coloring.assignment[f.cell_index(cell)] == cl) cls.insert(p);
        }
        if (!is_star_free(cls)) throw std::logic_error("chi_exact class contains a star");
      }
      return r;
    }
    if (search.out_of_budget) break;
  }

  // Budget exhausted: fall back to a first-fit coloring.
  std::vector<std::vector<Coords>> classes;
  for (const Coords& p : pts) {
    int placed = -1;
    for (size_t cl = 0; cl < classes.size() && placed < 0; ++cl) {
      if (!completes_star(f.dims(), classes[cl], p)) placed = static_cast<int>(cl);
    }
    if (placed < 0) {
      classes.emplace_back();
      placed = static_cast<int>(classes.size()) - 1;
    }
    classes[placed].push_back(p);
    const Coords cell(p.begin(), p.end() - 1);
    r.coloring.assignment[f.cell_index(cell)] = placed;
  }
  r.value = static_cast<long long>(classes.size());
  r.coloring.colors = static_cast<int>(classes.size());
  r.exhaustive = false;
  return r;
}

Coloring coloring_from_cover(const GraphFunctionTable& f, const Cover& c) {
  validate_cover(f, c);
  Coloring out;
  out.colors = static_cast<int>(c.classes.size());
  out.assignment.assign(f.cell_count(), -1);
  for (size_t i = 0; i < c.classes.size(); ++i) {
    for (const Coords& p : c.classes[i].points) {
      const Coords cell(p.begin(), p.end() - 1);
      int& slot = out.assignment[f.cell_index(cell)];
      if (slot < 0) slot = static_cast<int>(i);
    }
  }
  for (int a : out.assignment) {
    if (a < 0) throw CoverError("cover does not color every cell");
  }
  return out;
}

ChiUpperBound chi_upper_from_alpha(const GroupSpec& g, int k, long long alpha) {
  if (alpha < 1) throw std::invalid_argument("chi_upper_from_alpha: alpha >= 1 required");
  ChiUpperBound out;
  out.patch_allowance = 1;
  for (int i = 0; i < k - 1; ++i) out.patch_allowance *= g.order;
  const double t = 2.0 * k * static_cast<double>(out.patch_allowance) *
                   std::log(static_cast<double>(g.order)) / static_cast<double>(alpha);
  out.bound = static_cast<long long>(std::ceil(t));
  return out;
}

ExtractionTrace lemma37_extract(const GraphFunctionTable& f, const Coloring& c) {
  if (f.k != 3) throw std::invalid_argument("lemma37_extract needs k=3");
  if (validate_table(f) == TableKind::GraphFunction) {
    throw std::invalid_argument("lemma37_extract needs a linjection");
  }
  const int n = f.n;
  const long long L = c.colors;
  const long long NL = static_cast<long long>(f.N) * L;
  if (static_cast<long long>(c.assignment.size()) != f.cell_count()) {
    throw std::invalid_argument("coloring does not match the table");
  }

  auto color_of = [&](int x, int y) { return c.assignment[f.cell_index({x, y})]; };

  std::set<int> rows, cols;
  for (int i = 0; i < n; ++i) {
    rows.insert(i);
    cols.insert(i);
  }

  ExtractionTrace trace;
  std::set<int> retired;
  long long prev_size = -1;
  while (true) {
    if (static_cast<long long>(trace.levels.size()) > L) {
      throw std::logic_error("extraction trace exceeded L+1 levels");
    }
    // Most frequent value in the current rectangle, then most abundant color
    // among its cells; ties to the smallest index.
    std::map<int, long long> value_freq;
    for (int x : rows) {
      for (int y : cols) ++value_freq[f.value({x, y})];
    }
    if (value_freq.empty()) break;
    int v = -1;
    long long best = -1;
    for (const auto& [val, cnt] : value_freq) {
      if (cnt > best) {
        v = val;
        best = cnt;
      }
    }
    std::map<int, long long> color_freq;
    for (int x : rows) {
      for (int y : cols) {
        if (f.value({x, y}) == v) ++color_freq[color_of(x, y)];
      }
    }
    int col = -1;
    best = -1;
    for (const auto& [cc, cnt] : color_freq) {
      if (cnt > best) {
        col = cc;
        best = cnt;
      }
    }

    ExtractionLevel level;
    level.value = v;
    level.color = col;
    for (int x : rows) {
      for (int y : cols) {
        if (f.value({x, y}) == v && color_of(x, y) == col) level.s_cells.insert({x, y});
      }
    }
    const long long s = static_cast<long long>(level.s_cells.size());

    if (trace.levels.empty()) {
      if (s * NL < static_cast<long long>(n) * n) {
        throw std::logic_error("level 1 violates |S1| >= n^2/(NL)");
      }
    } else {
      const long long half = prev_size / 2;
      if (s * 4 * NL < half * half) {
        throw std::logic_error("level " + std::to_string(trace.levels.size() + 1) +
                               " violates |S| >= floor(|S'|/2)^2/(4NL)");
      }
    }

    if (s <= 1) {
      trace.levels.push_back(std::move(level));
      break;
    }

    // Rows of the first half, columns of the second half, in lex order.
    std::vector<Coords> ordered(level.s_cells.begin(), level.s_cells.end());
    const size_t lo = ordered.size() / 2;
    std::set<int> srows, scols;
    for (const Coords& cell : ordered) {
      if (!srows.insert(cell[0]).second || !scols.insert(cell[1]).second) {
        throw std::logic_error("value class repeats a row or column");
      }
    }
    level.rect_rows.clear();
    level.rect_cols.clear();
    for (size_t i = 0; i < lo; ++i) level.rect_rows.insert(ordered[i][0]);
    for (size_t i = lo; i < ordered.size(); ++i) level.rect_cols.insert(ordered[i][1]);

    // Rectangle legality: inside the closure, disjoint from S, and missing
    // every retired color.
    retired.insert(col);
    for (int x : level.rect_rows) {
      if (!srows.count(x)) throw std::logic_error("rectangle row outside the closure");
      for (int y : level.rect_cols) {
        if (!scols.count(y)) throw std::logic_error("rectangle column outside the closure");
        if (level.s_cells.count({x, y})) {
          throw std::logic_error("rectangle intersects its own S level");
        }
        if (retired.count(color_of(x, y))) {
          throw std::logic_error("retired color reappears inside the rectangle");
        }
      }
    }

    rows = level.rect_rows;
    cols = level.rect_cols;
    prev_size = s;
    trace.levels.push_back(std::move(level));
  }
  return trace;
}

namespace {

int bit_width_ll(long long v) {
  int w = 0;
  while (v > 0) {
    ++w;
    v >>= 1;
  }
  return w;
}

// Sign of n^(E+1) - B^E without floating point: -1, 0 or +1.
int compare_powers(long long n, long long B, long long E) {
  if (n == 1) return B == 1 ? 0 : -1;
  if (B <= n) return 1;  // n^(E+1) >= n * B^E > B^E
  // B >= n+1 from here.
  if (B >= 2 * n && E >= bit_width_ll(n)) return -1;  // B^E >= 2^E n^E > n^(E+1)
  // (1 + 1/n)^(n+1) >= 2, so E/(n+1) doublings beat n.
  if (E / (n + 1) >= bit_width_ll(n)) return -1;
  const cpp_int lhs = boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(E + 1));
  const cpp_int rhs = boost::multiprecision::pow(cpp_int(B), static_cast<unsigned>(E));
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

}  // namespace

BoundReport bound_checks(long long n, long long N, long long L) {
  if (n < 1 || N < 1 || L < 1) throw std::invalid_argument("bound_checks: n, N, L >= 1");
  BoundReport r;
  r.n = n;
  r.N = N;
  r.L = L;
  const long long E = (L < 62) ? (1ll << (L + 1)) - 1
                               : std::numeric_limits<long long>::max();
  r.lemma37_holds = compare_powers(n, 4 * N * L, E) < 0;
  const long long E2 = (L < 62) ? (1ll << L) - 1 : std::numeric_limits<long long>::max();
  r.corollary38_holds = compare_powers(n, 4 * L * N, E2) <= 0;
  return r;
}

long long least_l(long long n, long long N) {
  for (long long L = 1;; ++L) {
    if (bound_checks(n, N, L).lemma37_holds) return L;
  }
}

std::pair<long long, long long> closure_stats(const PointSet& S) {
  if (!meets_lines_at_most_once(S)) {
    throw std::invalid_argument("closure_stats: set meets a line twice");
  }
  const PointSet closed = closure_min(S);
  return {static_cast<long long>(S.size()), static_cast<long long>(closed.size())};
}

}  // namespace nof
