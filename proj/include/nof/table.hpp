#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nof/types.hpp"

namespace nof {

enum class TableKind { GraphFunction, Linjection, Permutation };

std::string to_string(TableKind kind);

// The map A(f): [n]^{k-1} -> [N] of a graph function, stored row-major with
// the last cell index fastest.
struct GraphFunctionTable {
  int k = 3;
  int n = 0;
  int N = 0;
  std::vector<int> table;
  TableKind kind = TableKind::GraphFunction;

  Dims dims() const { return Dims{k, n, N}; }

  long long cell_count() const {
    long long c = 1;
    for (int i = 0; i < k - 1; ++i) c *= n;
    return c;
  }

  long long cell_index(const Coords& cell) const {
    long long idx = 0;
    for (int i = 0; i < k - 1; ++i) idx = idx * n + cell[i];
    return idx;
  }

  Coords cell_of_index(long long idx) const {
    Coords cell(k - 1);
    for (int i = k - 2; i >= 0; --i) {
      cell[i] = static_cast<int>(idx % n);
      idx /= n;
    }
    return cell;
  }

  int value(const Coords& cell) const { return table[cell_index(cell)]; }

  // Accepted point (cell, A(cell)).
  Coords accepted(const Coords& cell) const {
    Coords p = cell;
    p.push_back(value(cell));
    return p;
  }

  bool accepts(const Coords& point) const {
    Coords cell(point.begin(), point.end() - 1);
    return value(cell) == point.back();
  }

  PointSet accepted_points() const;
};

struct TableValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strongest valid kind for the table; throws on out-of-range entries.
TableKind validate_table(const GraphFunctionTable& t);

// Lift a set of cells ([n]^{k-1}) to the accepted points of t.
PointSet lift_cells(const GraphFunctionTable& t, const std::set<Coords>& cells);

// Table families.
//
// XOR over bit vectors: A(x_1..x_{k-1}) = x_1 ^ ... ^ x_{k-1}, n a power of 2.
GraphFunctionTable xor_table(int n, int k = 3);
// Exact-T mod n: A(x, y) = (T - x - y) mod n.
GraphFunctionTable mod_table(int n, int T = 0);
// Exact-T over Z_m^d, cells packed base m (least significant digit first).
GraphFunctionTable zmd_table(int m, int d, const Coords& T);

}  // namespace nof
