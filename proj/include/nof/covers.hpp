#pragma once

#include <cstdint>
#include <vector>

#include "nof/protocol.hpp"
#include "nof/table.hpp"

namespace nof {

struct CoverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An ordered list of star-free point sets covering (or partitioning) the
// accepted points of a table.
struct Cover {
  enum class Mode { Cover, Partition };
  Mode mode = Mode::Cover;
  std::vector<PointSet> classes;

  size_t class_count() const { return classes.size(); }
};

// Throws CoverError if any class contains a star, classes are not subsets of
// f^-1(1), the union misses an accepted point, or (partition mode) classes
// overlap.
void validate_cover(const GraphFunctionTable& f, const Cover& c);

// The one-way protocol reading off a cover: the last player announces the
// class of the accepted point on its visible line, the others confirm
// consistency. Cost is exactly ceil(log2 classes) + k - 1.
ProtocolSpec compile_cover_protocol(const GraphFunctionTable& f, const Cover& c);
int compiled_cover_cost(const GraphFunctionTable& f, const Cover& c);

// A finite abelian group for the Exact-T family: Z_2^j or Z_order.
struct GroupSpec {
  enum class Type { Z2Power, Cyclic };
  Type type = Type::Cyclic;
  int order = 0;

  int add(int a, int b) const { return type == Type::Z2Power ? (a ^ b) : (a + b) % order; }
  int sub(int a, int b) const {
    return type == Type::Z2Power ? (a ^ b) : ((a - b) % order + order) % order;
  }
  static GroupSpec z2_power(int bits);
  static GroupSpec cyclic(int order) { return GroupSpec{Type::Cyclic, order}; }
};

// A(x_1..x_{k-1}) = T - sum(x_i) in G.
GraphFunctionTable group_table(const GroupSpec& g, int k = 3, int T = 0);

// A maximum (size 8) star-free subset of the accepted points of the XOR table
// on [4]^2, pinned from an exhaustive search.
PointSet z2_square_base_set();

// t-fold tensor power of a star-free subset of a Z_2^s XOR table's accepted
// points: per-axis concatenation of group elements, size |S|^t.
PointSet tensor_power(const PointSet& S, int t);

// Randomized translate cover of group_table(g, k): ceil(2 k |G|^{k-1} ln|G| /
// |S|) sampled translates plus greedy patches, returned as a partition into
// star-free classes.
Cover translate_cover(const PointSet& S, const GroupSpec& g, int k, uint64_t seed);

// Number of translates the construction is allowed before patching.
long long translate_budget(const GroupSpec& g, int k, long long seed_size);

// A 3-AP-free subset of {0..M-1}: best sphere shell of the digit lattice, or
// a greedy AP-free sequence when the lattice degenerates.
std::vector<long long> behrend_set(long long M);

// {(x, y) in [n]^2 : x + 2y in B}; corner-free whenever B is 3-AP-free.
// Returned as a k=2 point set.
PointSet corner_free_from_ap_free(const std::vector<long long>& B, int n);

// The Behrend-based baseline for the mod-n Exact-T table.
struct CflBaseline {
  GraphFunctionTable table;
  PointSet seed_set;  // lifted corner-free class
  Cover cover;
  ProtocolSpec protocol;
};
CflBaseline cfl_baseline_protocol(int n, uint64_t seed);

int ceil_log2(long long v);

}  // namespace nof
