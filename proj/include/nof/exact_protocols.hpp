#pragma once

#include <cstdint>
#include <vector>

#include "nof/protocol.hpp"

namespace nof {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer quadratic form v D v^t.
struct QuadraticForm {
  std::vector<std::vector<long long>> d;

  static QuadraticForm identity(int dim);
  int dim() const { return static_cast<int>(d.size()); }
  bool positive_definite() const;
  long long evaluate(const std::vector<long long>& v) const;
};

// Coefficients for the family of protocols comparing a(T-y-z)+by+cz and its
// rotations under a positive definite form. The defaults compare squared
// Euclidean norms of x + 2y + 3z "to the best of each player's knowledge".
struct ExactTForm {
  long long a = 1;
  long long b = 2;
  long long c = 3;
  QuadraticForm q;  // empty = identity
};

// Base-m digit helpers, least significant digit first.
std::vector<long long> to_digits(long long value, int m, int d);
long long from_digits(const std::vector<long long>& digits, int m);

// The vector a x + b y + c z as reconstructed by one player from the target
// and its two visible vectors (u, v in the order the player sees them).
std::vector<long long> exact_t_player_vector(int player, const ExactTForm& form,
                                             const std::vector<long long>& T,
                                             const std::vector<long long>& u,
                                             const std::vector<long long>& v);

// Chained base-m carry vector of §4.2 and the unchained overflow variant,
// plus the adjusted target T'_i = T_i + m C_i - C_{i-1}.
std::vector<int> carry_vector(const std::vector<long long>& p,
                              const std::vector<long long>& q,
                              const std::vector<long long>& T, int m);
std::vector<int> overflow_vector(const std::vector<long long>& p,
                                 const std::vector<long long>& q,
                                 const std::vector<long long>& T, int m);
std::vector<long long> carry_adjusted_target(const std::vector<long long>& T,
                                             const std::vector<int>& c, int m);

// Exact-T over Z^d on inputs from [m]^d (packed base m into one coordinate
// per player). Accepts iff x + y + z = T coordinatewise over Z.
ProtocolSpec exact_t_vector_protocol(int m, int d, const std::vector<long long>& T,
                                     const ExactTForm& form = {});

// Upper bound on the announced value |v_x D v_x^t| over the input box; the
// announcement width is bits(1 + bound).
long long exact_t_value_bound(int m, int d, const std::vector<long long>& T,
                              const ExactTForm& form = {});
int exact_t_announce_width(int m, int d, const std::vector<long long>& T,
                           const ExactTForm& form = {});

// Exactly-n via base-m carry vectors: inputs x, y, z in [n], accept iff
// x + y + z = n over Z. d = 1 + ceil(log_m n), T = base-m digits of n.
struct ExactlyNParams {
  long long n = 0;
  int m = 0;
  int d = 0;
  std::vector<long long> target;  // digits of n
};
ExactlyNParams exactly_n_params(long long n, int m);
ProtocolSpec exactly_n_protocol(long long n, int m);

// Analytic worst-case cost in bits of the accept path (2d carry bits, two
// agreement bits, the announced norm, two more agreement bits).
long long exactly_n_max_cost(long long n, int m);

// 2^ceil(sqrt(log2 n)) clamped to [2, n].
int choose_base(long long n);

// Table-driven evaluator equivalent to exactly_n_protocol's acceptance,
// for exhaustive sweeps where per-input transcripts would be too slow.
class ExactlyNEvaluator {
 public:
  ExactlyNEvaluator(long long n, int m);
  bool accepts(int x, int y, int z) const {
    uint64_t c = carries_[idx(y, z)];
    return c == carries_[idx(x, z)] && c == carries_[idx(x, y)] &&
           nx_[idx(y, z)] == ny_[idx(x, z)] && nx_[idx(y, z)] == nz_[idx(x, y)];
  }

 private:
  size_t idx(int a, int b) const { return static_cast<size_t>(a) * n_ + b; }
  long long n_;
  std::vector<uint64_t> carries_;
  std::vector<long long> nx_, ny_, nz_;
};

// Exact-T over Z_m^d (addition mod m), via per-player overflow vectors.
// Accepts iff x + y + z = T coordinatewise mod m. T has digits in [m].
ProtocolSpec zmd_modular_protocol(int m, int d, const std::vector<long long>& T);

}  // namespace nof
