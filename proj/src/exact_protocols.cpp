#include "nof/exact_protocols.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace nof {

QuadraticForm QuadraticForm::identity(int dim) {
  QuadraticForm q;
  q.d.assign(dim, std::vector<long long>(dim, 0));
  for (int i = 0; i < dim; ++i) q.d[i][i] = 1;
  return q;
}

bool QuadraticForm::positive_definite() const {
  const int n = dim();
  if (n == 0) return false;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(d[i].size()) != n) return false;
    for (int j = 0; j < n; ++j) {
      if (d[i][j] != d[j][i]) return false;
    }
  }
  // Sylvester's criterion with fraction-free (Bareiss) elimination.
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = d[i][j];
  }
  __int128 prev = 1;
  for (int p = 0; p < n; ++p) {
    if (a[p][p] <= 0) return false;  // leading minor a[p][p] after elimination
    for (int i = p + 1; i < n; ++i) {
      for (int j = p + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
      }
    }
    prev = a[p][p];
  }
  return true;
}

long long QuadraticForm::evaluate(const std::vector<long long>& v) const {
  long long acc = 0;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) acc += d[i][j] * v[i] * v[j];
  }
  return acc;
}

std::vector<long long> to_digits(long long value, int m, int d) {
  std::vector<long long> digits(d, 0);
  for (int i = 0; i < d; ++i) {
    digits[i] = value % m;
    value /= m;
  }
  if (value != 0) throw ConfigError("value does not fit in d base-m digits");
  return digits;
}

long long from_digits(const std::vector<long long>& digits, int m) {
  long long v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * m + *it;
  return v;
}

namespace {

int bit_width_ll(long long v) {
  int w = 0;
  while (v > 0) {
    ++w;
    v >>= 1;
  }
  return std::max(w, 1);
}

QuadraticForm resolve_form(const ExactTForm& form, int d) {
  QuadraticForm q = form.q.dim() == 0 ? QuadraticForm::identity(d) : form.q;
  if (q.dim() != d) throw ConfigError("quadratic form dimension mismatch");
  if (!q.positive_definite()) {
    throw ConfigError("quadratic form must be positive definite");
  }
  if (form.a == form.b || form.a == form.c || form.b == form.c) {
    throw ConfigError("coefficients a, b, c must be pairwise distinct");
  }
  return q;
}

}  // namespace

// Player's estimate of ax + by + cz given its two visible vectors.
std::vector<long long> exact_t_player_vector(int player, const ExactTForm& f,
                                             const std::vector<long long>& T,
                                             const std::vector<long long>& u,
                                             const std::vector<long long>& v) {
  // player 0 sees (y, z), player 1 sees (x, z), player 2 sees (x, y).
  const int d = static_cast<int>(T.size());
  std::vector<long long> out(d);
  for (int i = 0; i < d; ++i) {
    switch (player) {
      case 0: out[i] = f.a * (T[i] - u[i] - v[i]) + f.b * u[i] + f.c * v[i]; break;
      case 1: out[i] = f.a * u[i] + f.b * (T[i] - u[i] - v[i]) + f.c * v[i]; break;
      default: out[i] = f.a * u[i] + f.b * v[i] + f.c * (T[i] - u[i] - v[i]);
    }
  }
  return out;
}

namespace {

// Worst |v D v^t| over per-coordinate intervals [lo_i, hi_i].
long long form_bound(const QuadraticForm& q, const std::vector<long long>& lo,
                     const std::vector<long long>& hi) {
  const int d = q.dim();
  std::vector<long long> mag(d);
  for (int i = 0; i < d; ++i) mag[i] = std::max(std::llabs(lo[i]), std::llabs(hi[i]));
  long long b = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) b += std::llabs(q.d[i][j]) * mag[i] * mag[j];
  }
  return b;
}

long long pack_value(const std::vector<long long>& digits, int m) {
  long long v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * m + *it;
  return v;
}

// Smallest carry k in {0,1,2} with pair_sum <= T_i + k*m.
int carry_entry(long long pair_sum, long long t, int m) {
  int k = 0;
  while (pair_sum > t + static_cast<long long>(k) * m) ++k;
  if (k > 2) throw std::logic_error("carry entry out of {0,1,2}");
  return k;
}

}  // namespace

std::vector<int> carry_vector(const std::vector<long long>& p,
                              const std::vector<long long>& q,
                              const std::vector<long long>& T, int m) {
  const int d = static_cast<int>(T.size());
  std::vector<int> c(d);
  int prev = 0;
  for (int i = 0; i < d; ++i) {
    c[i] = carry_entry(p[i] + q[i] + prev, T[i], m);
    prev = c[i];
  }
  return c;
}

std::vector<int> overflow_vector(const std::vector<long long>& p,
                                 const std::vector<long long>& q,
                                 const std::vector<long long>& T, int m) {
  const int d = static_cast<int>(T.size());
  std::vector<int> c(d);
  for (int i = 0; i < d; ++i) c[i] = carry_entry(p[i] + q[i], T[i], m);
  return c;
}

std::vector<long long> carry_adjusted_target(const std::vector<long long>& T,
                                             const std::vector<int>& c, int m) {
  std::vector<long long> t(T.size());
  int prev = 0;
  for (size_t i = 0; i < T.size(); ++i) {
    t[i] = T[i] + static_cast<long long>(m) * c[i] - prev;
    prev = c[i];
  }
  return t;
}

namespace {

uint64_t pack_carries(const std::vector<int>& c) {
  uint64_t bits = 0;
  for (size_t i = 0; i < c.size(); ++i) bits |= static_cast<uint64_t>(c[i]) << (2 * i);
  return bits;
}

std::string carry_bits(const std::vector<int>& c) {
  std::string s;
  s.reserve(2 * c.size());
  for (int v : c) {
    s.push_back((v & 2) ? '1' : '0');
    s.push_back((v & 1) ? '1' : '0');
  }
  return s;
}

}  // namespace

ProtocolSpec exact_t_vector_protocol(int m, int d, const std::vector<long long>& T,
                                     const ExactTForm& form) {
  if (m < 1 || d < 1 || static_cast<int>(T.size()) != d) {
    throw ConfigError("exact_t_vector_protocol: need m, d >= 1 and |T| = d");
  }
  ExactTForm f = form;
  f.q = resolve_form(form, d);

  long long box = 1;
  for (int i = 0; i < d; ++i) {
    box *= m;
    if (box > (1ll << 30)) throw ConfigError("m^d too large to pack into a coordinate");
  }
  const int width = exact_t_announce_width(m, d, T, form);

  ProtocolSpec p;
  p.k = 3;
  p.coord_range = {static_cast<int>(box), static_cast<int>(box), static_cast<int>(box)};
  p.schedule = [](const Board& b) {
    if (b.size() < 3) return NextStep::move(static_cast<int>(b.size()));
    return NextStep::halt(b[1].bits == "1" && b[2].bits == "1");
  };
  p.message = [m, d, T, f, width](int player, const VisibleInput& in, const Board& b) {
    auto u = to_digits(in[player == 0 ? 1 : 0], m, d);
    auto v = to_digits(in[player == 2 ? 1 : 2], m, d);
    long long value = f.q.evaluate(exact_t_player_vector(player, f, T, u, v));
    if (player == 0) return encode_bits(static_cast<unsigned long long>(value), width);
    long long announced = 0;
    for (char bit : b[0].bits) announced = announced * 2 + (bit - '0');
    return std::string(announced == value ? "1" : "0");
  };
  return p;
}

long long exact_t_value_bound(int m, int d, const std::vector<long long>& T,
                              const ExactTForm& form) {
  ExactTForm f = form;
  f.q = resolve_form(form, d);
  // Player 0's vector is a*T_i + (b-a)*y_i + (c-a)*z_i over y, z in [0, m-1].
  std::vector<long long> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    long long base = f.a * T[i];
    long long ymin = std::min<long long>(0, (f.b - f.a) * (m - 1));
    long long ymax = std::max<long long>(0, (f.b - f.a) * (m - 1));
    long long zmin = std::min<long long>(0, (f.c - f.a) * (m - 1));
    long long zmax = std::max<long long>(0, (f.c - f.a) * (m - 1));
    lo[i] = base + ymin + zmin;
    hi[i] = base + ymax + zmax;
  }
  return form_bound(f.q, lo, hi);
}

int exact_t_announce_width(int m, int d, const std::vector<long long>& T,
                           const ExactTForm& form) {
  return bit_width_ll(exact_t_value_bound(m, d, T, form));
}

ExactlyNParams exactly_n_params(long long n, int m) {
  if (n < 1 || m < 2) {
    throw ConfigError("exactly_n: need n >= 1 and m >= 2");
  }
  int e = 0;
  long long pw = 1;
  while (pw < n) {
    pw *= m;
    ++e;
  }
  ExactlyNParams params;
  params.n = n;
  params.m = m;
  params.d = e + 1;
  params.target = to_digits(n, m, params.d);
  return params;
}

namespace {

// Width of the announced norm in the carry protocol's final comparison:
// v_i = T'_i + y_i + 2 z_i with T'_i in [T_i - 2, T_i + 2m].
int exactly_n_inner_width(const ExactlyNParams& p) {
  long long bound = 0;
  for (int i = 0; i < p.d; ++i) {
    long long lo = p.target[i] - 2;
    long long hi = p.target[i] + 2ll * p.m + 3ll * (p.m - 1);
    long long mag = std::max(std::llabs(lo), std::llabs(hi));
    bound += mag * mag;
  }
  return bit_width_ll(bound);
}

long long carry_norm(const std::vector<long long>& p, const std::vector<long long>& q,
                     const std::vector<long long>& T, int m, int player) {
  auto c = carry_vector(p, q, T, m);
  auto tp = carry_adjusted_target(T, c, m);
  ExactTForm f;
  f.q = QuadraticForm::identity(static_cast<int>(T.size()));
  std::vector<long long> v = exact_t_player_vector(player, f, tp, p, q);
  long long norm = 0;
  for (long long e : v) norm += e * e;
  return norm;
}

}  // namespace

ProtocolSpec exactly_n_protocol(long long n, int m) {
  const ExactlyNParams params = exactly_n_params(n, m);
  if (n > (1ll << 30)) throw ConfigError("input range too large to simulate");
  const int width = exactly_n_inner_width(params);

  ProtocolSpec p;
  p.k = 3;
  p.coord_range = {static_cast<int>(n), static_cast<int>(n), static_cast<int>(n)};
  p.schedule = [](const Board& b) {
    if (b.size() == 3 && (b[1].bits != "1" || b[2].bits != "1")) return NextStep::halt(0);
    if (b.size() < 6) return NextStep::move(static_cast<int>(b.size()) % 3);
    return NextStep::halt(b[4].bits == "1" && b[5].bits == "1");
  };
  p.message = [params, width](int player, const VisibleInput& in, const Board& b) {
    auto u = to_digits(in[player == 0 ? 1 : 0], params.m, params.d);
    auto v = to_digits(in[player == 2 ? 1 : 2], params.m, params.d);
    if (b.size() < 3) {  // carry phase
      auto c = carry_vector(u, v, params.target, params.m);
      if (player == 0) return carry_bits(c);
      return std::string(carry_bits(c) == b[0].bits ? "1" : "0");
    }
    long long norm = carry_norm(u, v, params.target, params.m, player);
    if (player == 0) return encode_bits(static_cast<unsigned long long>(norm), width);
    long long announced = 0;
    for (char bit : b[3].bits) announced = announced * 2 + (bit - '0');
    return std::string(announced == norm ? "1" : "0");
  };
  return p;
}

long long exactly_n_max_cost(long long n, int m) {
  const ExactlyNParams params = exactly_n_params(n, m);
  return 2ll * params.d + 2 + exactly_n_inner_width(params) + 2;
}

int choose_base(long long n) {
  if (n < 2) throw ConfigError("choose_base: need n >= 2");
  int s = 1;
  while (!(s * s >= 63 || (1ll << (s * s)) >= n)) ++s;
  long long m = 1ll << s;
  m = std::max<long long>(2, std::min<long long>(m, n));
  return static_cast<int>(m);
}

ExactlyNEvaluator::ExactlyNEvaluator(long long n, int m) : n_(n) {
  const ExactlyNParams params = exactly_n_params(n, m);
  if (n > 4096) throw ConfigError("evaluator table would be too large");
  const size_t cells = static_cast<size_t>(n) * n;
  carries_.resize(cells);
  nx_.resize(cells);
  ny_.resize(cells);
  nz_.resize(cells);
  std::vector<std::vector<long long>> digits(n);
  for (long long v = 0; v < n; ++v) digits[v] = to_digits(v, m, params.d);
  for (long long a = 0; a < n; ++a) {
    for (long long b = 0; b < n; ++b) {
      const size_t i = static_cast<size_t>(a) * n + b;
      // Each player's carry vector is the same function of its visible pair;
      // the compared norms differ per player.
      carries_[i] = pack_carries(carry_vector(digits[a], digits[b], params.target, m));
      nx_[i] = carry_norm(digits[a], digits[b], params.target, m, 0);
      ny_[i] = carry_norm(digits[a], digits[b], params.target, m, 1);
      nz_[i] = carry_norm(digits[a], digits[b], params.target, m, 2);
    }
  }
}

ProtocolSpec zmd_modular_protocol(int m, int d, const std::vector<long long>& T) {
  if (m < 2 || d < 1 || static_cast<int>(T.size()) != d) {
    throw ConfigError("zmd_modular_protocol: need m >= 2 and |T| = d");
  }
  for (long long t : T) {
    if (t < 0 || t >= m) throw ConfigError("target digits must lie in [0, m)");
  }
  long long box = 1;
  for (int i = 0; i < d; ++i) {
    box *= m;
    if (box > (1ll << 30)) throw ConfigError("m^d too large to pack into a coordinate");
  }
  // v_i = T'_i + y_i + 2 z_i with T'_i = T_i + I_i * m in [0, 3m - 1].
  long long mag = 6ll * m - 4;
  const int width = bit_width_ll(static_cast<long long>(d) * mag * mag);

  ProtocolSpec p;
  p.k = 3;
  p.coord_range = {static_cast<int>(box), static_cast<int>(box), static_cast<int>(box)};
  p.schedule = [](const Board& b) {
    if (b.size() == 3 && (b[1].bits != "1" || b[2].bits != "1")) return NextStep::halt(0);
    if (b.size() < 6) return NextStep::move(static_cast<int>(b.size()) % 3);
    return NextStep::halt(b[4].bits == "1" && b[5].bits == "1");
  };
  p.message = [m, d, T, width](int player, const VisibleInput& in, const Board& b) {
    auto u = to_digits(in[player == 0 ? 1 : 0], m, d);
    auto v = to_digits(in[player == 2 ? 1 : 2], m, d);
    auto ov = overflow_vector(u, v, T, m);
    if (b.size() < 3) {
      std::string bits;
      for (int e : ov) {
        bits.push_back((e & 2) ? '1' : '0');
        bits.push_back((e & 1) ? '1' : '0');
      }
      if (player == 0) return bits;
      return std::string(bits == b[0].bits ? "1" : "0");
    }
    std::vector<long long> tp(d);
    for (int i = 0; i < d; ++i) tp[i] = T[i] + static_cast<long long>(ov[i]) * m;
    ExactTForm f;
    f.q = QuadraticForm::identity(d);
    std::vector<long long> vec = exact_t_player_vector(player, f, tp, u, v);
    long long norm = 0;
    for (long long e : vec) norm += e * e;
    if (player == 0) return encode_bits(static_cast<unsigned long long>(norm), width);
    long long announced = 0;
    for (char bit : b[3].bits) announced = announced * 2 + (bit - '0');
    return std::string(announced == norm ? "1" : "0");
  };
  return p;
}

}  // namespace nof
