#include "nof/closure.hpp"

#include <algorithm>
#include <map>

namespace nof {

bool is_star_of(const Coords& center, const std::vector<Coords>& pts) {
  if (pts.size() != center.size()) return false;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Coords& p = pts[i];
    if (p.size() != center.size()) return false;
    for (size_t j = 0; j < center.size(); ++j) {
      if (j == i) {
        if (p[j] == center[j]) return false;
      } else {
        if (p[j] != center[j]) return false;
      }
    }
  }
  return true;
}

namespace {

// For each axis, the values of S along every line anchor.
std::vector<std::map<Coords, std::vector<int>>> line_index(const PointSet& S) {
  const int k = S.dims.k;
  std::vector<std::map<Coords, std::vector<int>>> idx(k);
  for (const Coords& p : S.points) {
    for (int i = 0; i < k; ++i) {
      idx[i][drop_axis(p, i)].push_back(p[i]);
    }
  }
  return idx;
}

}  // namespace

std::vector<Star> find_stars(const PointSet& S) {
  const int k = S.dims.k;
  std::vector<Star> stars;
  if (static_cast<int>(S.size()) < k) return stars;

  auto idx = line_index(S);

  // Candidate centers share all coordinates but the first with some point of S.
  std::set<Coords> candidates;
  for (const Coords& p : S.points) {
    for (int v = 0; v < S.dims.axis_range(0); ++v) {
      if (v == p[0]) continue;
      Coords c = p;
      c[0] = v;
      candidates.insert(c);
    }
  }

  for (const Coords& c : candidates) {
    // Displacement choices per axis: points of S on the line through c,
    // excluding c's own coordinate.
    std::vector<std::vector<int>> choices(k);
    bool feasible = true;
    for (int i = 0; i < k && feasible; ++i) {
      auto it = idx[i].find(drop_axis(c, i));
      if (it != idx[i].end()) {
        for (int v : it->second) {
          if (v != c[i]) choices[i].push_back(v);
        }
      }
      if (choices[i].empty()) feasible = false;
    }
    if (!feasible) continue;

    // One star per combination of displacements.
    std::vector<size_t> pick(k, 0);
    while (true) {
      Star st;
      st.center = c;
      st.displaced.resize(k);
      for (int i = 0; i < k; ++i) {
        st.displaced[i] = c;
        st.displaced[i][i] = choices[i][pick[i]];
      }
      stars.push_back(std::move(st));
      int axis = k - 1;
      while (axis >= 0 && ++pick[axis] == choices[axis].size()) {
        pick[axis] = 0;
        --axis;
      }
      if (axis < 0) break;
    }
  }
  return stars;
}

bool is_star_free(const PointSet& S) { return find_stars(S).empty(); }

bool completes_star(const Dims& dims, const std::vector<Coords>& pts, const Coords& p) {
  const int need = dims.k - 1;
  const int s = static_cast<int>(pts.size());
  if (s < need) return false;
  std::vector<int> comb(need);
  for (int i = 0; i < need; ++i) comb[i] = i;
  while (true) {
    PointSet tmp(dims);
    tmp.points.insert(p);
    for (int c : comb) tmp.points.insert(pts[c]);
    if (static_cast<int>(tmp.points.size()) == dims.k && !is_star_free(tmp)) return true;
    int i = need - 1;
    while (i >= 0 && comb[i] == s - need + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < need; ++j) comb[j] = comb[j - 1] + 1;
  }
  return false;
}

PointSet closure_min(const PointSet& S) {
  PointSet out(S.dims);
  if (S.empty()) return out;
  const int k = S.dims.k;

  std::vector<std::set<Coords>> proj(k);
  for (const Coords& p : S.points) {
    for (int i = 0; i < k; ++i) proj[i].insert(drop_axis(p, i));
  }

  // A point survives iff each of its k projections occurs in S. Candidates
  // vary axis 0 over the anchors of S's axis-0 lines.
  for (const Coords& p : S.points) {
    for (int v = 0; v < S.dims.axis_range(0); ++v) {
      Coords c = p;
      c[0] = v;
      bool in = true;
      for (int i = 1; i < k && in; ++i) {
        in = proj[i].count(drop_axis(c, i)) > 0;
      }
      if (in) out.points.insert(std::move(c));
    }
  }
  return out;
}

PointSet closure_fixpoint(const PointSet& S) {
  PointSet cur = S;
  long long budget = S.dims.volume();
  for (long long round = 0; round <= budget; ++round) {
    std::set<Coords> add;
    for (const Star& st : find_stars(cur)) {
      if (!cur.contains(st.center)) add.insert(st.center);
    }
    if (add.empty()) return cur;
    cur.points.insert(add.begin(), add.end());
  }
  throw std::logic_error("closure_fixpoint exceeded its step budget");
}

bool is_cylinder_intersection(const PointSet& S) {
  return closure_min(S).points == S.points;
}

bool meets_lines_at_most_once(const PointSet& S) {
  const int k = S.dims.k;
  std::vector<std::set<Coords>> seen(k);
  for (const Coords& p : S.points) {
    for (int i = 0; i < k; ++i) {
      if (!seen[i].insert(drop_axis(p, i)).second) return false;
    }
  }
  return true;
}

}  // namespace nof
