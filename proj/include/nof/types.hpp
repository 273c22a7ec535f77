#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nof {

// A point in [n]^{k-1} x [N]. Coordinates are 0-indexed.
using Coords = std::vector<int>;

// Ambient dimensions shared by the points of a set.
struct Dims {
  int k = 3;
  int n = 0;
  int N = 0;

  int axis_range(int axis) const { return axis == k - 1 ? N : n; }

  bool contains(const Coords& c) const {
    if (static_cast<int>(c.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
      if (c[i] < 0 || c[i] >= axis_range(i)) return false;
    }
    return true;
  }

  // Number of points in the ambient box.
  long long volume() const {
    long long v = N;
    for (int i = 0; i < k - 1; ++i) v *= n;
    return v;
  }

  bool operator==(const Dims&) const = default;
};

// A line (a, i): all points agreeing with anchor off the free axis.
struct Line {
  Coords anchor;  // k-1 coordinates, in axis order with free_axis skipped
  int free_axis = 0;
};

// k points, the i-th displacing the center in coordinate i only.
// The center need not belong to the containing set.
struct Star {
  Coords center;
  std::vector<Coords> displaced;
};

struct PointSet {
  Dims dims;
  std::set<Coords> points;

  PointSet() = default;
  explicit PointSet(Dims d) : dims(d) {}

  void insert(const Coords& c) {
    if (!dims.contains(c)) {
      throw std::invalid_argument("point outside ambient box");
    }
    points.insert(c);
  }

  bool contains(const Coords& c) const { return points.count(c) > 0; }
  size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  bool operator==(const PointSet&) const = default;
};

// The anchor of the line through p with the given free axis.
inline Coords drop_axis(const Coords& p, int axis) {
  Coords a;
  a.reserve(p.size() - 1);
  for (size_t i = 0; i < p.size(); ++i) {
    if (static_cast<int>(i) != axis) a.push_back(p[i]);
  }
  return a;
}

}  // namespace nof
