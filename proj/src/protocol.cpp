#include "nof/protocol.hpp"

namespace nof {

Transcript run_protocol(const ProtocolSpec& p, const Coords& input) {
  if (static_cast<int>(input.size()) != p.k) {
    throw ProtocolError("input arity does not match the protocol");
  }
  for (int i = 0; i < p.k; ++i) {
    if (input[i] < 0 || input[i] >= p.coord_range.at(i)) {
      throw ProtocolError("input coordinate " + std::to_string(i) + " out of range");
    }
  }

  Transcript tr;
  const int budget = 4 * p.k;
  for (int round = 0; ; ++round) {
    NextStep step = p.schedule(tr.events);
    if (step.halted) {
      tr.output = step.output;
      return tr;
    }
    if (round >= budget) {
      throw ProtocolError("protocol exceeded its step budget");
    }
    if (step.player < 0 || step.player >= p.k) {
      throw ProtocolError("schedule named an invalid player");
    }
    VisibleInput visible(input, step.player);
    Event ev;
    ev.player = step.player;
    ev.bits = p.message(step.player, visible, tr.events);
    tr.total_bits += static_cast<long long>(ev.bits.size());
    tr.events.push_back(std::move(ev));
  }
}

std::string encode_bits(unsigned long long value, int width) {
  std::string out(width, '0');
  for (int i = width - 1; i >= 0; --i) {
    out[i] = (value & 1ull) ? '1' : '0';
    value >>= 1;
  }
  return out;
}

}  // namespace nof
