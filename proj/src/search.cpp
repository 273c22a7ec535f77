#include "nof/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "nof/closure.hpp"

namespace nof {

namespace {

// Branch and bound for a maximum subset of M items avoiding every forbidden
// item set (independent set in a small uniform hypergraph). Items are visited
// in index order, include branch first.
struct IndepSearch {
  int M = 0;
  std::vector<std::vector<int>> forbidden;      // sorted item indices
  std::vector<std::vector<int>> forbid_by_item; // forbidden ids touching item
  long long budget = kDefaultNodeBudget;

  long long nodes = 0;
  bool out_of_budget = false;
  std::vector<char> chosen;
  std::vector<int> best;

  void run() {
    chosen.assign(M, 0);
    forbid_by_item.assign(M, {});
    for (size_t fi = 0; fi < forbidden.size(); ++fi) {
      for (int it : forbidden[fi]) forbid_by_item[it].push_back(static_cast<int>(fi));
    }
    std::vector<int> cur;
    dfs(0, cur);
  }

  void dfs(int idx, std::vector<int>& cur) {
    if (out_of_budget) return;
    if (++nodes > budget) {
      out_of_budget = true;
      return;
    }
    if (static_cast<int>(cur.size()) + (M - idx) <= static_cast<int>(best.size())) return;
    if (idx == M) {
      best = cur;
      return;
    }
    bool admissible = true;
    for (int fi : forbid_by_item[idx]) {
      bool complete = true;
      for (int it : forbidden[fi]) {
        if (it != idx && !chosen[it]) {
          complete = false;
          break;
        }
      }
      if (complete) {
        admissible = false;
        break;
      }
    }
    if (admissible) {
      chosen[idx] = 1;
      cur.push_back(idx);
      dfs(idx + 1, cur);
      cur.pop_back();
      chosen[idx] = 0;
    }
    dfs(idx + 1, cur);
  }
};

}  // namespace

SearchResult alpha_exact(const GraphFunctionTable& f, long long budget) {
  const PointSet accepted = f.accepted_points();
  std::vector<Coords> pts(accepted.points.begin(), accepted.points.end());
  std::vector<std::vector<int>> stars;
  {
    std::map<Coords, int> index;
    for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
    for (const Star& st : find_stars(accepted)) {
      std::vector<int> ids;
      for (const Coords& d : st.displaced) ids.push_back(index.at(d));
      std::sort(ids.begin(), ids.end());
      stars.push_back(std::move(ids));
    }
  }

  // Visit high-degree points first: they constrain the most stars.
  std::vector<int> degree(pts.size(), 0);
  for (const auto& st : stars) {
    for (int it : st) ++degree[it];
  }
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });
  std::vector<int> pos(pts.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

  IndepSearch search;
  search.M = static_cast<int>(pts.size());
  search.budget = budget;
  for (auto& st : stars) {
    for (int& it : st) it = pos[it];
    std::sort(st.begin(), st.end());
  }
  search.forbidden = std::move(stars);
  search.run();

  SearchResult r;
  r.witness = PointSet(f.dims());
  for (int it : search.best) r.witness.insert(pts[order[it]]);
  r.value = static_cast<long long>(r.witness.size());
  r.exhaustive = !search.out_of_budget;
  r.nodes = search.nodes;
  if (!is_star_free(r.witness)) {
    throw std::logic_error("alpha_exact produced a witness containing a star");
  }
  return r;
}

namespace {

// DFS over cells in row-major order, assigning a value or leaving the cell
// blank, under line constraints in every axis. Values are introduced in
// increasing order (relabeling symmetry).
struct AlphaBarSearch {
  Dims dims;
  long long budget = kDefaultNodeBudget;

  long long nodes = 0;
  bool out_of_budget = false;
  std::vector<Coords> cells;
  std::vector<Coords> cur;
  std::vector<Coords> best;
  std::vector<std::set<std::vector<int>>> used;  // per cell axis: (anchor, value)

  void run() {
    const int k = dims.k;
    long long count = 1;
    for (int i = 0; i < k - 1; ++i) count *= dims.n;
    for (long long idx = 0; idx < count; ++idx) {
      Coords cell(k - 1);
      long long rest = idx;
      for (int i = k - 2; i >= 0; --i) {
        cell[i] = static_cast<int>(rest % dims.n);
        rest /= dims.n;
      }
      cells.push_back(std::move(cell));
    }
    used.assign(k - 1, {});
    dfs(0, 0);
  }

  std::vector<int> line_key(const Coords& cell, int axis, int value) const {
    std::vector<int> key = drop_axis(cell, axis);
    key.push_back(value);
    return key;
  }

  void dfs(size_t cell_idx, int max_value_used) {
    if (out_of_budget) return;
    if (++nodes > budget) {
      out_of_budget = true;
      return;
    }
    if (cur.size() + (cells.size() - cell_idx) <= best.size()) return;
    if (cell_idx == cells.size()) {
      best = cur;
      return;
    }
    const Coords& cell = cells[cell_idx];
    const int limit = std::min(dims.N - 1, max_value_used + 1);
    for (int b = 0; b <= limit; ++b) {
      bool free_lines = true;
      for (int axis = 0; axis < dims.k - 1; ++axis) {
        if (used[axis].count(line_key(cell, axis, b))) {
          free_lines = false;
          break;
        }
      }
      if (!free_lines) continue;
      Coords p = cell;
      p.push_back(b);
      if (completes_star(dims, cur, p)) continue;
      for (int axis = 0; axis < dims.k - 1; ++axis) used[axis].insert(line_key(cell, axis, b));
      cur.push_back(p);
      dfs(cell_idx + 1, std::max(max_value_used, b));
      cur.pop_back();
      for (int axis = 0; axis < dims.k - 1; ++axis) used[axis].erase(line_key(cell, axis, b));
      if (out_of_budget) return;
    }
    dfs(cell_idx + 1, max_value_used);
  }
};

}  // namespace

SearchResult alpha_bar_exact(int n, int N, int k, long long budget) {
  if (n < 1 || N < 1 || k < 3) {
    throw std::invalid_argument("alpha_bar_exact: n, N >= 1 and k >= 3 required");
  }
  AlphaBarSearch search;
  search.dims = Dims{k, n, N};
  search.budget = budget;
  search.run();

  SearchResult r;
  r.witness = PointSet(search.dims);
  for (const Coords& p : search.best) r.witness.insert(p);
  r.value = static_cast<long long>(r.witness.size());
  r.exhaustive = !search.out_of_budget;
  r.nodes = search.nodes;
  if (!is_star_free(r.witness) || !meets_lines_at_most_once(r.witness)) {
    throw std::logic_error("alpha_bar_exact produced an invalid witness");
  }
  return r;
}

GraphFunctionTable extend_to_linjection(const PointSet& S, int n, int N) {
  const int k = S.dims.k;
  if (S.dims.n != n || S.dims.N != N) {
    throw std::invalid_argument("extend_to_linjection: ambient mismatch");
  }
  if (!meets_lines_at_most_once(S)) {
    throw TableValidationError("partial set meets a line twice");
  }

  GraphFunctionTable t;
  t.k = k;
  t.n = n;
  t.N = N;
  t.table.assign(t.cell_count(), -1);
  for (const Coords& p : S.points) {
    t.table[t.cell_index(Coords(p.begin(), p.end() - 1))] = p.back();
  }

  // used[axis] holds (cell anchor without that axis, value) pairs.
  std::vector<std::set<std::vector<int>>> used(k - 1);
  auto key = [](const Coords& cell, int axis, int value) {
    std::vector<int> key = drop_axis(cell, axis);
    key.push_back(value);
    return key;
  };
  auto mark = [&](const Coords& cell, int value) {
    for (int axis = 0; axis < k - 1; ++axis) used[axis].insert(key(cell, axis, value));
  };
  for (long long idx = 0; idx < t.cell_count(); ++idx) {
    if (t.table[idx] >= 0) mark(t.cell_of_index(idx), t.table[idx]);
  }
  for (long long idx = 0; idx < t.cell_count(); ++idx) {
    if (t.table[idx] >= 0) continue;
    const Coords cell = t.cell_of_index(idx);
    int pick = -1;
    for (int b = 0; b < N && pick < 0; ++b) {
      bool ok = true;
      for (int axis = 0; axis < k - 1; ++axis) {
        if (used[axis].count(key(cell, axis, b))) {
          ok = false;
          break;
        }
      }
      if (ok) pick = b;
    }
    if (pick < 0) {
      std::string where;
      for (int c : cell) where += std::to_string(c) + ",";
      throw TableValidationError("no admissible value at cell (" + where + ")");
    }
    t.table[idx] = pick;
    mark(cell, pick);
  }
  t.kind = validate_table(t);
  if (t.kind == TableKind::GraphFunction) {
    throw std::logic_error("completion is not a linjection");
  }
  return t;
}

namespace {

bool tuple_violates(const XPattern& X, const std::vector<const std::vector<int>*>& ordered) {
  const int n = static_cast<int>(ordered[0]->size());
  std::vector<int> col(ordered.size());
  for (int i = 0; i < n; ++i) {
    for (size_t j = 0; j < ordered.size(); ++j) col[j] = (*ordered[j])[i];
    if (!X.tuples.count(col)) return false;  // this coordinate escapes
  }
  return true;
}

// Some ordering of the members has every coordinate's value tuple in X.
bool subset_violates(const XPattern& X, std::vector<const std::vector<int>*> members) {
  std::sort(members.begin(), members.end());
  do {
    if (tuple_violates(X, members)) return true;
  } while (std::next_permutation(members.begin(), members.end()));
  return false;
}

}  // namespace

XFreeResult xfree_max(const XPattern& X, int n, long long budget) {
  if (X.q < 1 || n < 1) throw std::invalid_argument("xfree_max: q, n >= 1 required");
  long long universe = 1;
  for (int i = 0; i < n; ++i) {
    universe *= X.q;
    if (universe > 4096) throw std::invalid_argument("xfree_max: universe too large");
  }

  std::vector<std::vector<int>> elems;
  for (long long v = 0; v < universe; ++v) {
    std::vector<int> e(n);
    long long rest = v;
    for (int i = n - 1; i >= 0; --i) {
      e[i] = static_cast<int>(rest % X.q);
      rest /= X.q;
    }
    elems.push_back(std::move(e));
  }

  const int r = X.arity;
  IndepSearch search;
  search.M = static_cast<int>(elems.size());
  search.budget = budget;
  std::vector<int> comb(r);
  std::iota(comb.begin(), comb.end(), 0);
  if (search.M >= r) {
    while (true) {
      std::vector<const std::vector<int>*> members;
      for (int c : comb) members.push_back(&elems[c]);
      if (subset_violates(X, members)) {
        search.forbidden.emplace_back(comb.begin(), comb.end());
      }
      int i = r - 1;
      while (i >= 0 && comb[i] == search.M - r + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  search.run();

  XFreeResult out;
  for (int it : search.best) out.witness.push_back(elems[it]);
  out.value = static_cast<long long>(out.witness.size());
  out.exhaustive = !search.out_of_budget;
  out.nodes = search.nodes;

  // Independent re-check of the witness.
  if (static_cast<int>(out.witness.size()) >= r) {
    std::vector<int> wcomb(r);
    std::iota(wcomb.begin(), wcomb.end(), 0);
    const int W = static_cast<int>(out.witness.size());
    while (true) {
      std::vector<const std::vector<int>*> members;
      for (int c : wcomb) members.push_back(&out.witness[c]);
      if (subset_violates(X, members)) {
        throw std::logic_error("xfree_max produced a violating witness");
      }
      int i = r - 1;
      while (i >= 0 && wcomb[i] == W - r + i) --i;
      if (i < 0) break;
      ++wcomb[i];
      for (int j = i + 1; j < r; ++j) wcomb[j] = wcomb[j - 1] + 1;
    }
  }
  return out;
}

std::vector<int> psi_map(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("psi_map: length mismatch");
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~1) || (b[i] & ~1)) throw std::invalid_argument("psi_map: entries must be bits");
    out[i] = 2 * a[i] + b[i];
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> psi_inverse(const std::vector<int>& v) {
  std::vector<int> a(v.size()), b(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > 3) throw std::invalid_argument("psi_inverse: entries must be in Z_4");
    a[i] = v[i] >> 1;
    b[i] = v[i] & 1;
  }
  return {a, b};
}

XPattern xpattern_catalog(const std::string& name, int param) {
  XPattern X;
  if (name == "theorem19") {
    X.q = 4;
    X.arity = 3;
    X.tuples = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3},
                {0, 1, 2}, {1, 0, 3}, {2, 3, 0}, {3, 2, 1}};
    return X;
  }
  if (name == "hales-jewett") {
    if (param < 2) throw std::invalid_argument("hales-jewett: s >= 2 required");
    X.q = param;
    X.arity = param;
    std::vector<int> line(param);
    std::iota(line.begin(), line.end(), 0);
    X.tuples.insert(line);
    for (int i = 0; i < param; ++i) X.tuples.insert(std::vector<int>(param, i));
    return X;
  }
  if (name == "capset") {
    if (param < 2) throw std::invalid_argument("capset: q >= 2 required");
    X.q = param;
    X.arity = 3;
    for (int a = 0; a < param; ++a) {
      for (int b = 0; b < param; ++b) {
        for (int c = 0; c < param; ++c) {
          if ((a + c) % param == (2 * b) % param) X.tuples.insert({a, b, c});
        }
      }
    }
    return X;
  }
  throw std::invalid_argument("unknown pattern: " + name);
}

}  // namespace nof
