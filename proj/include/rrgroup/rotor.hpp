#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

#include "rrgroup/cover.hpp"

namespace rrgroup {

/// Rotor index per non-sink vertex; index k means the rotor points at slot k
/// of the vertex's rotor sequence. All zeros is the configuration in which
/// every rotor points to the ancestor.
struct RotorConfig {
  std::vector<std::uint16_t> rotor;

  bool operator==(const RotorConfig&) const = default;
};

RotorConfig zero_config(const WiredTree& w);

enum class Exit : std::uint8_t { Down, Up };

struct StepResult {
  RotorConfig config;
  Vertex position;
};

struct RoutingResult {
  RotorConfig final_config;
  Exit exit = Exit::Down;
  std::uint64_t steps = 0;
};

/// Bit n is 1 iff particle n left through a collapsed-leaf slot.
using EscapeSequence = std::vector<std::uint8_t>;

inline constexpr std::uint64_t kDefaultStepCap = 1'000'000'000;

/// Advance the rotor at `pos`, then move along it.
StepResult step(const WiredTree& w, RotorConfig c, Vertex pos);

/// Walk from `start` until the sink is reached. Throws CapExceeded after
/// `step_cap` steps.
RoutingResult route_to_sink(const WiredTree& w, RotorConfig c, Vertex start,
                            std::uint64_t step_cap = kDefaultStepCap);

/// In-place routing used by the simulators. Returns the exit side and adds the
/// number of steps taken to `steps`.
Exit route_in_place(const WiredTree& w, RotorConfig& c, Vertex start, std::uint64_t& steps,
                    std::uint64_t step_cap = kDefaultStepCap);

/// Route `n` particles one after another from the root.
std::pair<EscapeSequence, RotorConfig> escape_sequence(const WiredTree& w, RotorConfig c,
                                                       std::uint64_t n);

/// True iff the rotor edges form an oriented spanning tree rooted at the sink.
bool is_recurrent(const WiredTree& w, const RotorConfig& c);

/// Every recurrent configuration, in mixed-radix order of the rotor vector
/// (vertex 0 most significant). Throws CapExceeded when the configuration
/// space exceeds `cap`.
std::vector<RotorConfig> enumerate_recurrent(const WiredTree& w, std::uint64_t cap = 10'000'000);

/// Mixed-radix code of a configuration; a dense index into the configuration space.
std::uint64_t encode(const WiredTree& w, const RotorConfig& c);
RotorConfig decode(const WiredTree& w, std::uint64_t code);

/// The action of the routing operators e_x on the recurrent configurations
/// reachable from `start`, stored as a permutation table per vertex.
struct RoutingAction {
  std::vector<RotorConfig> states;             ///< orbit of `start`, discovery order
  std::vector<std::vector<std::uint32_t>> op;  ///< op[x][s] = index of e_x(states[s])
};

/// Breadth-first closure of `start` under all e_x. Throws CapExceeded if the
/// configuration space exceeds `cap`.
RoutingAction routing_action(const WiredTree& w, const RotorConfig& start,
                             std::uint64_t cap = 10'000'000);

struct GroupAxioms {
  std::size_t orbit = 0;   ///< configurations reachable from the start
  bool closed = false;     ///< every reachable configuration is recurrent
  bool injective = false;  ///< every e_x permutes the orbit
  bool abelian = false;    ///< e_x e_y = e_y e_x on the orbit
};

/// Checks the group axioms of {e_x} on the orbit of the zero configuration.
GroupAxioms check_group_axioms(const WiredTree& w, std::uint64_t cap = 10'000'000);

/// Writes `particle,exit,steps` per particle routed from the root, starting
/// from `c`, with a header line.
void write_trace_csv(std::ostream& out, const WiredTree& w, RotorConfig c, std::uint64_t n);

template <class Rng>
RotorConfig random_config(const WiredTree& w, Rng& rng) {
  RotorConfig c = zero_config(w);
  for (std::size_t x = 0; x < w.size(); ++x) {
    std::uniform_int_distribution<int> slot(0, w.degree(static_cast<Vertex>(x)) - 1);
    c.rotor[x] = static_cast<std::uint16_t>(slot(rng));
  }
  return c;
}

}  // namespace rrgroup
