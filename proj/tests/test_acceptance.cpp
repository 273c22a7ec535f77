#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "nof/bounds.hpp"
#include "nof/closure.hpp"
#include "nof/covers.hpp"
#include "nof/exact_protocols.hpp"
#include "nof/protocol.hpp"
#include "nof/rs_graphs.hpp"
#include "nof/search.hpp"
#include "nof/table.hpp"

using namespace nof;

namespace {

void report(int criterion, const char* label, bool ok) {
  std::printf("criterion %2d [%s]: %s\n", criterion, label, ok ? "PASS" : "FAIL");
  std::fflush(stdout);
  CHECK_MESSAGE(ok, "criterion ", criterion, " (", label, ")");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool protocol_matches_table(const ProtocolSpec& p, const GraphFunctionTable& f) {
  for (int x = 0; x < f.n; ++x) {
    for (int y = 0; y < f.n; ++y) {
      for (int v = 0; v < f.N; ++v) {
        if (run_protocol(p, {x, y, v}).output != (f.accepts({x, y, v}) ? 1 : 0)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("criterion 1: exactly-n exhaustive correctness, n <= 256") {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 1; n <= 256 && ok; ++n) {
    std::set<int> bases{2, 4};
    if (n >= 2) bases.insert(choose_base(n));
    for (int m : bases) {
      ExactlyNEvaluator ev(n, m);
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n; ++y) {
          for (int z = 0; z < n; ++z) {
            if (ev.accepts(x, y, z) != (x + y + z == n)) {
              ok = false;
              break;
            }
          }
        }
      }
    }
  }
  // Cross-check the evaluator against the full simulator at small n.
  for (int n : {5, 16, 31}) {
    for (int m : {2, 4}) {
      ProtocolSpec p = exactly_n_protocol(n, m);
      ExactlyNEvaluator ev(n, m);
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y)
          for (int z = 0; z < n; ++z)
            if (ev.accepts(x, y, z) != (run_protocol(p, {x, y, z}).output == 1)) {
              ok = false;
              break;
            }
    }
  }
  const double dt = seconds_since(t0);
  report(1, "exactly-n exhaustive n<=256", ok && dt < 60.0);
}

TEST_CASE("criterion 2: exactly-n cost scales as sqrt(log n)") {
  const std::vector<int> exponents{4, 9, 16, 25};
  std::vector<double> xs, ys;
  for (int e : exponents) {
    const long long n = 1ll << e;
    xs.push_back(std::sqrt(static_cast<double>(e)));
    ys.push_back(static_cast<double>(exactly_n_max_cost(n, choose_base(n))));
  }
  // Least-squares fit y = C x + C'.
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double C = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double Cp = (sy - C * sx) / k;
  bool ok = C > 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    ok = ok && std::abs(ys[i] - (C * xs[i] + Cp)) <= 4.0;
  }
  report(2, "exactly-n cost fit C*sqrt(log n)+C' within 4 bits", ok);
}

TEST_CASE("criterion 3: sphere protocol correctness, identity, and cost") {
  bool ok = true;
  std::mt19937_64 rng(123);
  const std::vector<std::pair<int, int>> configs{{2, 1}, {3, 2}, {4, 2}};
  for (auto [m, d] : configs) {
    long long box = 1;
    for (int i = 0; i < d; ++i) box *= m;
    for (int target = 0; target < 5 && ok; ++target) {
      std::vector<long long> T(d);
      for (int i = 0; i < d; ++i) T[i] = static_cast<long long>(rng() % (3 * m));
      ProtocolSpec p = exact_t_vector_protocol(m, d, T);
      const int width = exact_t_announce_width(m, d, T);
      for (long long xi = 0; xi < box && ok; ++xi) {
        for (long long yi = 0; yi < box && ok; ++yi) {
          for (long long zi = 0; zi < box; ++zi) {
            auto x = to_digits(xi, m, d);
            auto y = to_digits(yi, m, d);
            auto z = to_digits(zi, m, d);
            bool want = true;
            for (int i = 0; i < d; ++i) want = want && x[i] + y[i] + z[i] == T[i];
            Transcript t = run_protocol(p, {static_cast<int>(xi), static_cast<int>(yi),
                                            static_cast<int>(zi)});
            if (t.output != (want ? 1 : 0) || t.total_bits > width + 2) {
              ok = false;
              break;
            }
          }
        }
      }
    }
  }
  // Lemma 20 identity on 1e5 fuzzed inputs.
  ExactTForm f;
  for (int trial = 0; trial < 100000 && ok; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 5);
    std::vector<long long> T(d), x(d), y(d), z(d);
    for (int i = 0; i < d; ++i) {
      T[i] = static_cast<long long>(rng() % 101) - 50;
      x[i] = static_cast<long long>(rng() % 32);
      y[i] = static_cast<long long>(rng() % 32);
      z[i] = static_cast<long long>(rng() % 32);
    }
    auto vx = exact_t_player_vector(0, f, T, y, z);
    auto vy = exact_t_player_vector(1, f, T, x, z);
    auto vz = exact_t_player_vector(2, f, T, x, y);
    for (int i = 0; i < d; ++i) ok = ok && vx[i] + vz[i] == 2 * vy[i];
  }
  report(3, "sphere protocol + v_x + v_z = 2 v_y", ok);
}

TEST_CASE("criterion 4: alpha(XOR_4) = 8 and alpha-bar(4,4) = 9") {
  auto t0 = std::chrono::steady_clock::now();
  SearchResult a = alpha_exact(xor_table(4));
  SearchResult ab = alpha_bar_exact(4, 4);
  const double dt = seconds_since(t0);
  bool ok = a.value == 8 && a.exhaustive && is_star_free(a.witness) &&
            ab.value == 9 && ab.exhaustive && is_star_free(ab.witness) &&
            meets_lines_at_most_once(ab.witness) && dt < 60.0;
  report(4, "alpha(XOR4)=8 exhaustive, alpha-bar(4,4)=9 exhaustive", ok);
}

TEST_CASE("criterion 5: tensor power of the 8-set") {
  PointSet sq = tensor_power(z2_square_base_set(), 2);
  GraphFunctionTable f16 = xor_table(16);
  bool ok = sq.size() == 64 && is_star_free(sq);
  for (const Coords& p : sq.points) ok = ok && f16.accepts(p);
  report(5, "|8-set tensor 8-set| = 64 = 2^(3*4/2), star-free", ok);
}

TEST_CASE("criterion 6: translate covers verified across 20 seeds") {
  bool ok = true;
  struct Config {
    GroupSpec g;
    PointSet seed_set;
    long long alpha;
  };
  GraphFunctionTable mod16 = mod_table(16);
  PointSet corner_cells = corner_free_from_ap_free(behrend_set(16), 16);
  std::set<Coords> cell_set(corner_cells.points.begin(), corner_cells.points.end());
  std::vector<Config> configs;
  configs.push_back({GroupSpec::z2_power(2), z2_square_base_set(), 8});
  configs.push_back({GroupSpec::z2_power(4), tensor_power(z2_square_base_set(), 2), 64});
  configs.push_back({GroupSpec::cyclic(16), lift_cells(mod16, cell_set),
                     static_cast<long long>(cell_set.size())});
  for (const Config& cfg : configs) {
    GraphFunctionTable f = group_table(cfg.g);
    const long long bound = chi_upper_from_alpha(cfg.g, 3, cfg.alpha).bound;
    for (uint64_t seed = 0; seed < 20 && ok; ++seed) {
      Cover c = translate_cover(cfg.seed_set, cfg.g, 3, seed);
      try {
        validate_cover(f, c);
      } catch (const CoverError&) {
        ok = false;
        break;
      }
      ok = ok && static_cast<long long>(c.class_count()) <= bound;
      if (seed < 3) {  // exhaustive protocol check on a few seeds per group
        ProtocolSpec p = compile_cover_protocol(f, c);
        ok = ok && protocol_matches_table(p, f);
        long long max_bits = 0;
        for (int x = 0; x < f.n; ++x)
          for (int y = 0; y < f.n; ++y)
            for (int v = 0; v < f.N; ++v)
              max_bits = std::max(max_bits, run_protocol(p, {x, y, v}).total_bits);
        ok = ok && max_bits == ceil_log2(static_cast<long long>(c.class_count())) + 2;
        ok = ok && compiled_cover_cost(f, c) == max_bits;
      }
    }
  }
  report(6, "translate covers: star-free partitions within chi upper bound", ok);
}

TEST_CASE("criterion 7: chi versus protocol cost consistency") {
  bool ok = true;
  for (const GraphFunctionTable& f : {xor_table(2), xor_table(4)}) {
    SearchResult a = alpha_exact(f);
    ChiResult x = chi_exact(f);
    const long long points = static_cast<long long>(f.accepted_points().size());
    ok = ok && a.exhaustive && x.exhaustive;
    ok = ok && x.value >= (points + a.value - 1) / a.value;

    Cover c;
    c.mode = Cover::Mode::Partition;
    c.classes.assign(x.coloring.colors, PointSet(f.dims()));
    for (long long idx = 0; idx < f.cell_count(); ++idx) {
      c.classes[x.coloring.assignment[idx]].insert(f.accepted(f.cell_of_index(idx)));
    }
    std::erase_if(c.classes, [](const PointSet& s) { return s.empty(); });
    ProtocolSpec p = compile_cover_protocol(f, c);
    ok = ok && protocol_matches_table(p, f);

    std::set<std::string> accepting;
    for (int xx = 0; xx < f.n; ++xx) {
      for (int yy = 0; yy < f.n; ++yy) {
        for (int v = 0; v < f.N; ++v) {
          Transcript t = run_protocol(p, {xx, yy, v});
          if (t.output == 1) {
            std::string key;
            for (const Event& e : t.events) key += e.bits + "|";
            accepting.insert(key);
          }
        }
      }
    }
    ok = ok && static_cast<long long>(accepting.size()) >= x.value;
  }
  report(7, "ceil(points/alpha) <= chi <= accepting transcript classes", ok);
}

TEST_CASE("criterion 8: conversion round trips and collision-free scheduling") {
  bool ok = true;
  std::vector<PointSet> witnesses{z2_square_base_set(), alpha_exact(xor_table(2)).witness,
                                  alpha_bar_exact(4, 4).witness,
                                  alpha_bar_exact(3, 5).witness};
  for (const PointSet& s : witnesses) {
    TriangleFamily t = triangles_of(s);
    ok = ok && t.size() == s.size();
    ok = ok && points_of(t, s.dims) == s;
    ok = ok && g_stars(t).empty() == find_stars(s).empty();

    MatchingFamily m = starfree_to_matchings(s);
    ok = ok && m.edge_count() == static_cast<long long>(s.size());
    ok = ok && is_induced_family(m);
    PointSet back = matchings_to_starfree(m);
    ok = ok && back.size() == s.size() && is_star_free(back);
  }

  // Schedules from translate-cover partitions never collide.
  for (int n : {4, 8}) {
    GroupSpec g = GroupSpec::cyclic(n);
    GraphFunctionTable f = group_table(g);
    PointSet cells = corner_free_from_ap_free(behrend_set(n), n);
    std::set<Coords> cell_set(cells.points.begin(), cells.points.end());
    Cover c = translate_cover(lift_cells(f, cell_set), g, 3, 9);
    std::vector<MatchingFamily> families;
    for (const PointSet& cls : c.classes) families.push_back(starfree_to_matchings(cls));
    try {
      std::vector<ScheduleRow> rows = channel_schedule(families);
      ok = ok && static_cast<long long>(rows.size()) == static_cast<long long>(n) * n;
    } catch (const GraphError&) {
      ok = false;
    }
  }
  report(8, "starfree<->matchings/triangles round trips, schedules collision-free", ok);
}

TEST_CASE("criterion 9: theorem 19 bijection") {
  bool ok = true;
  for (int a = 0; a < 4 && ok; ++a) {
    for (int b = 0; b < 4; ++b) {
      std::vector<int> x{a & 1, (a >> 1) & 1}, y{b & 1, (b >> 1) & 1};
      auto [rx, ry] = psi_inverse(psi_map(x, y));
      if (rx != x || ry != y) {
        ok = false;
        break;
      }
    }
  }
  XPattern X = xpattern_catalog("theorem19");
  std::set<std::vector<int>> images;
  const std::vector<std::pair<int, int>> cells{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (auto [x, y] : cells) {
    images.insert({psi_map({x}, {y})[0], psi_map({x}, {y ^ 1})[0], psi_map({x ^ 1}, {y})[0]});
  }
  std::set<std::vector<int>> off_diagonal;
  for (const auto& t : X.tuples) {
    if (!(t[0] == t[1] && t[1] == t[2])) off_diagonal.insert(t);
  }
  ok = ok && images == off_diagonal;

  XFreeResult xf = xfree_max(X, 2);
  SearchResult a = alpha_exact(xor_table(4));
  ok = ok && xf.exhaustive && xf.value == 8 && a.value == 8;
  report(9, "psi round trip, star-image cases, xfree(theorem19,2)=alpha(XOR4)=8", ok);
}

TEST_CASE("criterion 10: lemma 37 extraction and bound checks") {
  bool ok = true;
  // Exact colorings.
  for (const GraphFunctionTable& f : {xor_table(2), xor_table(4), mod_table(4)}) {
    ChiResult x = chi_exact(f);
    try {
      ExtractionTrace t = lemma37_extract(f, x.coloring);
      ok = ok && static_cast<long long>(t.levels.size()) <= x.value + 1;
    } catch (const std::logic_error&) {
      ok = false;
    }
  }
  // Translate-cover colorings.
  struct Cfg {
    GroupSpec g;
    PointSet seed;
  };
  GraphFunctionTable mod16 = mod_table(16);
  PointSet cc = corner_free_from_ap_free(behrend_set(16), 16);
  std::set<Coords> cs(cc.points.begin(), cc.points.end());
  std::vector<Cfg> cfgs;
  cfgs.push_back({GroupSpec::z2_power(2), z2_square_base_set()});
  cfgs.push_back({GroupSpec::z2_power(4), tensor_power(z2_square_base_set(), 2)});
  cfgs.push_back({GroupSpec::cyclic(16), lift_cells(mod16, cs)});
  for (const Cfg& cfg : cfgs) {
    GraphFunctionTable f = group_table(cfg.g);
    Cover c = translate_cover(cfg.seed, cfg.g, 3, 13);
    Coloring col = coloring_from_cover(f, c);
    try {
      ExtractionTrace t = lemma37_extract(f, col);
      ok = ok && static_cast<long long>(t.levels.size()) <= col.colors + 1;
    } catch (const std::logic_error&) {
      ok = false;
    }
  }
  // bound_checks against direct rational arithmetic on a 10^3 grid.
  using boost::multiprecision::cpp_int;
  const std::vector<long long> ns{2, 3, 5, 8, 16, 64, 512, 4096, 1ll << 16, 1ll << 20};
  const std::vector<long long> Ns{1, 2, 3, 4, 8, 32, 256, 2048, 1ll << 15, 1ll << 20};
  for (long long n : ns) {
    for (long long N : Ns) {
      for (long long L = 1; L <= 10; ++L) {
        const long long E = (1ll << (L + 1)) - 1;
        const cpp_int lhs = boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(E + 1));
        const cpp_int rhs =
            boost::multiprecision::pow(cpp_int(4) * N * L, static_cast<unsigned>(E));
        ok = ok && bound_checks(n, N, L).lemma37_holds == (lhs < rhs);
      }
    }
  }
  report(10, "lemma 37 traces valid, bound_checks matches exact rationals", ok);
}

TEST_CASE("criterion 11: behrend and corner oracles") {
  bool ok = true;
  for (long long M = 1; M <= 4096 && ok; ++M) {
    std::vector<long long> B = behrend_set(M);
    std::vector<char> in(M, 0);
    for (long long v : B) {
      if (v < 0 || v >= M) {
        ok = false;
        break;
      }
      in[v] = 1;
    }
    for (size_t i = 0; i < B.size() && ok; ++i) {
      for (size_t j = i + 1; j < B.size(); ++j) {
        const long long c = 2 * B[j] - B[i];
        if (c < M && in[c]) {
          ok = false;
          break;
        }
      }
    }
  }
  for (int n = 1; n <= 64 && ok; ++n) {
    PointSet s = corner_free_from_ap_free(behrend_set(n), n);
    for (const Coords& p : s.points) {
      for (int d = 1; d < n && ok; ++d) {
        if (p[0] + d < n && p[1] + d < n && s.contains({p[0] + d, p[1]}) &&
            s.contains({p[0], p[1] + d})) {
          ok = false;
        }
      }
    }
  }
  report(11, "behrend sets 3-AP-free (M<=4096), corner-free grids (n<=64)", ok);
}

TEST_CASE("criterion 12: closure oracles") {
  bool ok = true;
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 10000 && ok; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 4);
    const int N = 1 + static_cast<int>(rng() % 4);
    PointSet s(Dims{k, n, N});
    const long long vol = s.dims.volume();
    const long long count = static_cast<long long>(rng() % (vol + 1));
    for (long long i = 0; i < count; ++i) {
      Coords p(k);
      for (int a = 0; a < k; ++a) p[a] = static_cast<int>(rng() % s.dims.axis_range(a));
      s.insert(p);
    }
    ok = closure_min(s) == closure_fixpoint(s);
  }
  // phi_2 law on random line-respecting k=2 sets.
  for (int trial = 0; trial < 500 && ok; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int N = n + static_cast<int>(rng() % 4);
    std::vector<int> vals(N);
    for (int i = 0; i < N; ++i) vals[i] = i;
    std::shuffle(vals.begin(), vals.end(), rng);
    PointSet s(Dims{2, n, N});
    const int m = static_cast<int>(rng() % (n + 1));
    for (int x = 0; x < m; ++x) s.insert({x, vals[x]});
    ok = meets_lines_at_most_once(s) &&
         static_cast<long long>(closure_min(s).size()) ==
             static_cast<long long>(s.size()) * s.size();
  }
  report(12, "closure_min == closure_fixpoint (1e4 sets), |closure| = |S|^2 at k=2", ok);
}
