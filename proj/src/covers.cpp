#include "nof/covers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "nof/closure.hpp"
#include "nof/exact_protocols.hpp"

namespace nof {

int ceil_log2(long long v) {
  int w = 0;
  while ((1ll << w) < v) ++w;
  return w;
}

void validate_cover(const GraphFunctionTable& f, const Cover& c) {
  const PointSet accepted = f.accepted_points();
  std::map<Coords, int> owner;
  for (size_t i = 0; i < c.classes.size(); ++i) {
    const PointSet& cls = c.classes[i];
    if (cls.dims != f.dims()) throw CoverError("class ambient does not match the table");
    for (const Coords& p : cls.points) {
      if (!accepted.contains(p)) throw CoverError("class point is not accepted by f");
      auto [it, fresh] = owner.emplace(p, static_cast<int>(i));
      if (!fresh && c.mode == Cover::Mode::Partition) {
        throw CoverError("partition classes overlap");
      }
    }
    if (!is_star_free(cls)) {
      throw CoverError("class " + std::to_string(i) + " contains a star");
    }
  }
  if (owner.size() != accepted.size()) {
    throw CoverError("cover union does not equal f^-1(1)");
  }
}

namespace {

int first_class_of(const Cover& c, const Coords& p) {
  for (size_t i = 0; i < c.classes.size(); ++i) {
    if (c.classes[i].contains(p)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

ProtocolSpec compile_cover_protocol(const GraphFunctionTable& f, const Cover& c) {
  validate_cover(f, c);
  const int k = f.k;
  const int width = ceil_log2(static_cast<long long>(c.classes.size()));

  ProtocolSpec p;
  p.k = k;
  p.coord_range.assign(k, f.n);
  p.coord_range[k - 1] = f.N;
  p.schedule = [k](const Board& b) {
    if (b.empty()) return NextStep::move(k - 1);
    if (static_cast<int>(b.size()) < k) {
      return NextStep::move(static_cast<int>(b.size()) - 1);
    }
    for (int i = 1; i < k; ++i) {
      if (b[i].bits != "1") return NextStep::halt(0);
    }
    return NextStep::halt(1);
  };
  p.message = [f, c, k, width](int player, const VisibleInput& in, const Board& b) {
    if (player == k - 1) {
      Coords cell(k - 1);
      for (int i = 0; i < k - 1; ++i) cell[i] = in[i];
      int cls = first_class_of(c, f.accepted(cell));
      return encode_bits(static_cast<unsigned long long>(cls), width);
    }
    long long cls = 0;
    for (char bit : b[0].bits) cls = cls * 2 + (bit - '0');
    Coords probe(k);
    for (int i = 0; i < k; ++i) {
      if (i != player) probe[i] = in[i];
    }
    for (int v = 0; v < f.n; ++v) {
      probe[player] = v;
      if (c.classes[cls].contains(probe)) return std::string("1");
    }
    return std::string("0");
  };
  return p;
}

int compiled_cover_cost(const GraphFunctionTable& f, const Cover& c) {
  return ceil_log2(static_cast<long long>(c.classes.size())) + f.k - 1;
}

GroupSpec GroupSpec::z2_power(int bits) {
  return GroupSpec{Type::Z2Power, 1 << bits};
}

GraphFunctionTable group_table(const GroupSpec& g, int k, int T) {
  GraphFunctionTable t;
  t.k = k;
  t.n = t.N = g.order;
  t.table.resize(t.cell_count());
  for (long long idx = 0; idx < t.cell_count(); ++idx) {
    Coords cell = t.cell_of_index(idx);
    int v = T;
    for (int c : cell) v = g.sub(v, c);
    t.table[idx] = v;
  }
  t.kind = TableKind::Permutation;
  return t;
}

PointSet z2_square_base_set() {
  // Maximum star-free subset of the XOR table on [4]^2: the lexicographically
  // least 8-cell witness of the exhaustive search.
  static const int kCells[8][2] = {
      {0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 2}, {3, 3},
  };
  const GraphFunctionTable t = xor_table(4);
  PointSet S(t.dims());
  for (const auto& cell : kCells) {
    S.points.insert(t.accepted({cell[0], cell[1]}));
  }
  return S;
}

PointSet tensor_power(const PointSet& S, int t) {
  const int n = S.dims.n;
  if (S.dims.N != n || n < 2 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("tensor_power: set is not over a Z_2-power table");
  }
  const GraphFunctionTable base = xor_table(n, S.dims.k);
  for (const Coords& p : S.points) {
    if (!base.accepts(p)) {
      throw std::invalid_argument("tensor_power: point not accepted by the XOR table");
    }
  }
  if (t < 1) throw std::invalid_argument("tensor_power: t >= 1 required");

  PointSet cur = S;
  for (int step = 1; step < t; ++step) {
    PointSet next(Dims{S.dims.k, cur.dims.n * n, cur.dims.N * n});
    for (const Coords& hi : cur.points) {
      for (const Coords& lo : S.points) {
        Coords combined(hi.size());
        for (size_t i = 0; i < hi.size(); ++i) combined[i] = hi[i] * n + lo[i];
        next.points.insert(std::move(combined));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

long long translate_budget(const GroupSpec& g, int k, long long seed_size) {
  long long cells = 1;
  for (int i = 0; i < k - 1; ++i) cells *= g.order;
  double t = 2.0 * k * static_cast<double>(cells) * std::log(static_cast<double>(g.order)) /
             static_cast<double>(seed_size);
  return static_cast<long long>(std::ceil(t));
}

Cover translate_cover(const PointSet& S, const GroupSpec& g, int k, uint64_t seed) {
  if (S.empty()) throw CoverError("translate_cover: empty seed set");
  const GraphFunctionTable table = group_table(g, k);
  std::set<Coords> seed_cells;
  for (const Coords& p : S.points) {
    if (!table.accepts(p)) {
      throw CoverError("translate_cover: seed point not accepted by the group table");
    }
    seed_cells.insert(Coords(p.begin(), p.end() - 1));
  }
  if (!is_star_free(S)) throw CoverError("translate_cover: seed set contains a star");

  const long long t = translate_budget(g, k, static_cast<long long>(S.size()));
  std::mt19937_64 rng(seed);
  std::vector<Coords> offsets;
  offsets.reserve(t);
  for (long long i = 0; i < t; ++i) {
    Coords a(k - 1);
    for (int j = 0; j < k - 1; ++j) a[j] = static_cast<int>(rng() % g.order);
    offsets.push_back(std::move(a));
  }

  auto covered_by = [&](const Coords& cell, const Coords& offset) {
    Coords back(k - 1);
    for (int j = 0; j < k - 1; ++j) back[j] = g.sub(cell[j], offset[j]);
    return seed_cells.count(back) > 0;
  };

  // Patch every cell the sampled translates miss with a dedicated translate
  // through the seed's first cell.
  const Coords s0 = *seed_cells.begin();
  for (long long idx = 0; idx < table.cell_count(); ++idx) {
    Coords cell = table.cell_of_index(idx);
    bool hit = false;
    for (const Coords& a : offsets) {
      if (covered_by(cell, a)) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      Coords a(k - 1);
      for (int j = 0; j < k - 1; ++j) a[j] = g.sub(cell[j], s0[j]);
      offsets.push_back(std::move(a));
    }
  }

  // Assign each accepted point to its first covering translate.
  std::vector<PointSet> classes(offsets.size(), PointSet(table.dims()));
  for (long long idx = 0; idx < table.cell_count(); ++idx) {
    Coords cell = table.cell_of_index(idx);
    for (size_t i = 0; i < offsets.size(); ++i) {
      if (covered_by(cell, offsets[i])) {
        classes[i].points.insert(table.accepted(cell));
        break;
      }
    }
  }

  Cover cover;
  cover.mode = Cover::Mode::Partition;
  for (PointSet& cls : classes) {
    if (!cls.empty()) cover.classes.push_back(std::move(cls));
  }
  return cover;
}

std::vector<long long> behrend_set(long long M) {
  if (M < 1) throw std::invalid_argument("behrend_set: M >= 1 required");
  auto greedy = [M]() {
    std::vector<long long> out;
    std::set<long long> in;
    for (long long v = 0; v < M; ++v) {
      bool ok = true;
      for (long long b : out) {
        const long long a = 2 * b - v;  // v would finish the 3-AP (a, b, v)
        if (a >= 0 && in.count(a)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(v);
        in.insert(v);
      }
    }
    return out;
  };

  const int d = std::max(1, static_cast<int>(std::llround(std::sqrt(std::log2(
                                  static_cast<double>(std::max<long long>(M, 2)))))));
  long long r = static_cast<long long>(std::pow(static_cast<double>(M), 1.0 / d));
  auto powd = [d](long long base) {
    long long p = 1;
    for (int i = 0; i < d; ++i) {
      if (base != 0 && p > (1ll << 62) / base) return (1ll << 62);
      p *= base;
    }
    return p;
  };
  while (powd(r + 1) <= M) ++r;
  while (r > 0 && powd(r) > M) --r;
  const long long b = (r - 1) / 2;
  if (b < 1) return greedy();

  const long long base = 2 * b + 1;
  // Enumerate [0,b]^d, bucket by squared norm, keep the biggest shell.
  std::map<long long, std::vector<long long>> shells;
  Coords digit(d, 0);
  while (true) {
    long long norm = 0, value = 0, pw = 1;
    for (int i = 0; i < d; ++i) {
      norm += static_cast<long long>(digit[i]) * digit[i];
      value += pw * digit[i];
      pw *= base;
    }
    shells[norm].push_back(value);
    int axis = 0;
    while (axis < d && ++digit[axis] > b) digit[axis++] = 0;
    if (axis == d) break;
  }
  const std::vector<long long>* best = nullptr;
  long long best_norm = -1;
  for (const auto& [norm, values] : shells) {
    if (!best || values.size() > best->size()) {
      best = &values;
      best_norm = norm;
    }
  }
  (void)best_norm;
  std::vector<long long> out = *best;
  std::sort(out.begin(), out.end());
  return out;
}

PointSet corner_free_from_ap_free(const std::vector<long long>& B, int n) {
  std::set<long long> members(B.begin(), B.end());
  for (long long a : members) {
    for (long long c : members) {
      if (a >= c) continue;
      if ((a + c) % 2 == 0 && members.count((a + c) / 2)) {
        throw std::invalid_argument(
            "input set has a 3-AP: " + std::to_string(a) + ", " +
            std::to_string((a + c) / 2) + ", " + std::to_string(c));
      }
    }
  }
  PointSet S(Dims{2, n, n});
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (members.count(static_cast<long long>(x) + 2ll * y)) {
        S.points.insert({x, y});
      }
    }
  }
  return S;
}

CflBaseline cfl_baseline_protocol(int n, uint64_t seed) {
  if (n < 2) throw ConfigError("cfl_baseline_protocol: n >= 2 required");
  CflBaseline out;
  out.table = mod_table(n, 0);
  const PointSet cells = corner_free_from_ap_free(behrend_set(n), n);
  std::set<Coords> cell_set(cells.points.begin(), cells.points.end());
  out.seed_set = lift_cells(out.table, cell_set);
  out.cover = translate_cover(out.seed_set, GroupSpec::cyclic(n), 3, seed);
  out.protocol = compile_cover_protocol(out.table, out.cover);
  return out;
}

}  // namespace nof
