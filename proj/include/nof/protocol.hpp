#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nof/types.hpp"

namespace nof {

// One blackboard message. Bits are '0'/'1' characters; cost counts payload
// bits only (self-delimiting framing is the transcript container's concern).
struct Event {
  int player = 0;
  std::string bits;
};

using Board = std::vector<Event>;

struct Transcript {
  std::vector<Event> events;
  long long total_bits = 0;
  int output = 0;
};

// What player i sees: every coordinate of the input except its own. Indexing
// the hidden coordinate is a hard error, so the forehead rule holds by
// construction of this interface.
class VisibleInput {
 public:
  VisibleInput(const Coords& input, int hidden) : input_(input), hidden_(hidden) {}

  int operator[](int axis) const {
    if (axis == hidden_) {
      throw std::logic_error("player attempted to read its own coordinate");
    }
    return input_.at(axis);
  }

  int size() const { return static_cast<int>(input_.size()); }

 private:
  const Coords& input_;
  int hidden_;
};

// Scheduler verdict: either the next player to write, or the final output.
struct NextStep {
  bool halted = false;
  int output = 0;
  int player = 0;

  static NextStep move(int player) { return NextStep{false, 0, player}; }
  static NextStep halt(int output) { return NextStep{true, output, 0}; }
};

// A deterministic blackboard protocol. The schedule reads only the board; each
// message function reads the board plus the writer's visible coordinates.
struct ProtocolSpec {
  int k = 3;
  std::vector<int> coord_range;  // per-axis input ranges
  std::function<NextStep(const Board&)> schedule;
  std::function<std::string(int player, const VisibleInput&, const Board&)> message;
};

struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs p on the input under a 4k-round budget.
Transcript run_protocol(const ProtocolSpec& p, const Coords& input);

// Fixed-width binary, most significant bit first.
std::string encode_bits(unsigned long long value, int width);

}  // namespace nof
