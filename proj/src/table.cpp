#include "nof/table.hpp"

#include <map>

namespace nof {

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::GraphFunction: return "graph-function";
    case TableKind::Linjection: return "linjection";
    case TableKind::Permutation: return "permutation";
  }
  return "?";
}

PointSet GraphFunctionTable::accepted_points() const {
  PointSet S(dims());
  for (long long idx = 0; idx < cell_count(); ++idx) {
    S.points.insert(accepted(cell_of_index(idx)));
  }
  return S;
}

TableKind validate_table(const GraphFunctionTable& t) {
  if (t.k < 2 || t.n < 1 || t.N < 1) {
    throw TableValidationError("table dimensions must be positive, k >= 2");
  }
  if (static_cast<long long>(t.table.size()) != t.cell_count()) {
    throw TableValidationError("table is not total: expected " +
                               std::to_string(t.cell_count()) + " entries, got " +
                               std::to_string(t.table.size()));
  }
  for (long long idx = 0; idx < t.cell_count(); ++idx) {
    if (t.table[idx] < 0 || t.table[idx] >= t.N) {
      Coords cell = t.cell_of_index(idx);
      std::string where;
      for (int c : cell) where += std::to_string(c) + ",";
      throw TableValidationError("value out of range [0," + std::to_string(t.N) +
                                 ") at cell (" + where + ")");
    }
  }

  // Lines in the last axis hold exactly one accepted point by construction.
  // The remaining axes decide linjectivity: the restriction of A to any line
  // must be injective.
  bool linjective = t.N >= t.n;
  if (linjective) {
    for (int axis = 0; axis < t.k - 1 && linjective; ++axis) {
      std::map<std::pair<Coords, int>, int> seen;  // (anchor, value) -> count
      for (long long idx = 0; idx < t.cell_count(); ++idx) {
        Coords cell = t.cell_of_index(idx);
        Coords anchor = drop_axis(cell, axis);
        if (++seen[{anchor, t.table[idx]}] > 1) {
          linjective = false;
          break;
        }
      }
    }
  }
  if (!linjective) return TableKind::GraphFunction;
  if (t.N == t.n) return TableKind::Permutation;  // injective + N = n => every line hit once
  return TableKind::Linjection;
}

PointSet lift_cells(const GraphFunctionTable& t, const std::set<Coords>& cells) {
  PointSet S(t.dims());
  for (const Coords& cell : cells) S.points.insert(t.accepted(cell));
  return S;
}

GraphFunctionTable xor_table(int n, int k) {
  if (n < 1 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("xor_table needs n to be a power of 2");
  }
  GraphFunctionTable t;
  t.k = k;
  t.n = t.N = n;
  t.table.resize(t.cell_count());
  for (long long idx = 0; idx < t.cell_count(); ++idx) {
    Coords cell = t.cell_of_index(idx);
    int v = 0;
    for (int c : cell) v ^= c;
    t.table[idx] = v;
  }
  t.kind = TableKind::Permutation;
  return t;
}

GraphFunctionTable mod_table(int n, int T) {
  GraphFunctionTable t;
  t.k = 3;
  t.n = t.N = n;
  t.table.resize(t.cell_count());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t.table[static_cast<long long>(x) * n + y] = ((T - x - y) % n + 2 * n) % n;
    }
  }
  t.kind = TableKind::Permutation;
  return t;
}

GraphFunctionTable zmd_table(int m, int d, const Coords& T) {
  if (m < 2 || d < 1 || static_cast<int>(T.size()) != d) {
    throw std::invalid_argument("zmd_table needs m >= 2 and |T| = d");
  }
  long long n = 1;
  for (int i = 0; i < d; ++i) n *= m;
  GraphFunctionTable t;
  t.k = 3;
  t.n = t.N = static_cast<int>(n);
  t.table.resize(t.cell_count());
  for (long long x = 0; x < n; ++x) {
    for (long long y = 0; y < n; ++y) {
      long long xv = x, yv = y, b = 0, pow = 1;
      for (int i = 0; i < d; ++i) {
        int digit = ((T[i] - xv % m - yv % m) % m + 2 * m) % m;
        b += pow * digit;
        pow *= m;
        xv /= m;
        yv /= m;
      }
      t.table[x * n + y] = static_cast<int>(b);
    }
  }
  t.kind = TableKind::Permutation;
  return t;
}

}  // namespace nof
