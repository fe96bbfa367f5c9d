#include "rrgroup/rotor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "rrgroup/errors.hpp"

namespace rrgroup {

namespace {

void require_inner(const WiredTree& w, Vertex x) {
  if (x < 0 || static_cast<std::size_t>(x) >= w.size()) {
    throw std::invalid_argument("vertex " + std::to_string(x) + " is not a non-sink vertex");
  }
}

void require_space(const WiredTree& w, std::uint64_t cap) {
  const auto count = w.configuration_count();
  if (count > cap) {
    throw CapExceeded("rotor configuration space has " + std::to_string(count) + " elements (cap " +
                      std::to_string(cap) + ")");
  }
}

}  // namespace

RotorConfig zero_config(const WiredTree& w) { return RotorConfig{std::vector<std::uint16_t>(w.size(), 0)}; }

StepResult step(const WiredTree& w, RotorConfig c, Vertex pos) {
  require_inner(w, pos);
  auto& r = c.rotor[pos];
  r = static_cast<std::uint16_t>((r + 1) % w.degree(pos));
  const Vertex next = w.target(pos, r);
  return {std::move(c), next};
}

Exit route_in_place(const WiredTree& w, RotorConfig& c, Vertex start, std::uint64_t& steps,
                    std::uint64_t step_cap) {
  require_inner(w, start);
  const Vertex sink = w.sink();
  Vertex x = start;
  for (std::uint64_t taken = 1;; ++taken) {
    if (taken > step_cap) {
      throw CapExceeded("particle did not reach the sink within " + std::to_string(step_cap) + " steps");
    }
    auto& r = c.rotor[x];
    const int next_slot = r + 1 == w.degree(x) ? 0 : r + 1;
    r = static_cast<std::uint16_t>(next_slot);
    const Vertex y = w.target(x, next_slot);
    if (y == sink) {
      steps += taken;
      return WiredTree::is_down_exit(x, next_slot) ? Exit::Down : Exit::Up;
    }
    x = y;
  }
}

RoutingResult route_to_sink(const WiredTree& w, RotorConfig c, Vertex start, std::uint64_t step_cap) {
  RoutingResult result;
  result.exit = route_in_place(w, c, start, result.steps, step_cap);
  result.final_config = std::move(c);
  return result;
}

std::pair<EscapeSequence, RotorConfig> escape_sequence(const WiredTree& w, RotorConfig c,
                                                       std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("escape sequence needs at least one particle");
  EscapeSequence bits;
  bits.reserve(n);
  std::uint64_t steps = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    bits.push_back(route_in_place(w, c, WiredTree::root(), steps) == Exit::Up ? 1 : 0);
  }
  return {std::move(bits), std::move(c)};
}

bool is_recurrent(const WiredTree& w, const RotorConfig& c) {
  enum : std::uint8_t { kFresh, kOnPath, kDone };
  const auto n = w.size();
  std::vector<std::uint8_t> state(n, kFresh);
  std::vector<Vertex> path;
  for (std::size_t s = 0; s < n; ++s) {
    Vertex x = static_cast<Vertex>(s);
    path.clear();
    while (x != w.sink() && state[x] == kFresh) {
      state[x] = kOnPath;
      path.push_back(x);
      x = w.target(x, c.rotor[x]);
    }
    if (x != w.sink() && state[x] == kOnPath) return false;
    for (Vertex y : path) state[y] = kDone;
  }
  return true;
}

std::uint64_t encode(const WiredTree& w, const RotorConfig& c) {
  std::uint64_t code = 0;
  for (std::size_t x = 0; x < w.size(); ++x) {
    code = code * w.degree(static_cast<Vertex>(x)) + c.rotor[x];
  }
  return code;
}

RotorConfig decode(const WiredTree& w, std::uint64_t code) {
  RotorConfig c = zero_config(w);
  for (std::size_t x = w.size(); x-- > 0;) {
    const auto deg = static_cast<std::uint64_t>(w.degree(static_cast<Vertex>(x)));
    c.rotor[x] = static_cast<std::uint16_t>(code % deg);
    code /= deg;
  }
  return c;
}

std::vector<RotorConfig> enumerate_recurrent(const WiredTree& w, std::uint64_t cap) {
  require_space(w, cap);
  std::vector<RotorConfig> found;
  RotorConfig c = zero_config(w);
  for (;;) {
    if (is_recurrent(w, c)) found.push_back(c);
    // Odometer increment, last vertex fastest.
    std::size_t x = w.size();
    while (x-- > 0) {
      if (++c.rotor[x] < w.degree(static_cast<Vertex>(x))) break;
      c.rotor[x] = 0;
    }
    if (x == static_cast<std::size_t>(-1)) return found;
  }
}

RoutingAction routing_action(const WiredTree& w, const RotorConfig& start, std::uint64_t cap) {
  require_space(w, cap);
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(w.configuration_count(), kUnseen);

  RoutingAction action;
  action.op.assign(w.size(), {});
  action.states.push_back(start);
  index[encode(w, start)] = 0;
  std::uint64_t steps = 0;
  for (std::size_t s = 0; s < action.states.size(); ++s) {
    for (std::size_t x = 0; x < w.size(); ++x) {
      RotorConfig next = action.states[s];
      route_in_place(w, next, static_cast<Vertex>(x), steps);
      auto& slot = index[encode(w, next)];
      if (slot == kUnseen) {
        slot = static_cast<std::uint32_t>(action.states.size());
        action.states.push_back(std::move(next));
      }
      auto& table = action.op[x];
      if (table.size() <= s) table.resize(s + 1, kUnseen);
      table[s] = slot;
    }
  }
  return action;
}

GroupAxioms check_group_axioms(const WiredTree& w, std::uint64_t cap) {
  const auto action = routing_action(w, zero_config(w), cap);
  const auto states = action.states.size();
  GroupAxioms result;
  result.orbit = states;
  result.closed = std::all_of(action.states.begin(), action.states.end(),
                              [&](const RotorConfig& c) { return is_recurrent(w, c); });
  result.injective = true;
  std::vector<bool> hit(states);
  for (const auto& table : action.op) {
    std::fill(hit.begin(), hit.end(), false);
    for (auto t : table) {
      if (t >= states || hit[t]) result.injective = false;
      if (t < states) hit[t] = true;
    }
  }
  result.abelian = true;
  for (std::size_t x = 0; x < w.size() && result.abelian; ++x) {
    for (std::size_t y = x + 1; y < w.size() && result.abelian; ++y) {
      for (std::size_t s = 0; s < states; ++s) {
        if (action.op[x][action.op[y][s]] != action.op[y][action.op[x][s]]) {
          result.abelian = false;
          break;
        }
      }
    }
  }
  return result;
}

void write_trace_csv(std::ostream& out, const WiredTree& w, RotorConfig c, std::uint64_t n) {
  out << "particle,exit,steps\n";
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t steps = 0;
    const Exit exit = route_in_place(w, c, WiredTree::root(), steps);
    out << k << ',' << (exit == Exit::Up ? "up" : "down") << ',' << steps << '\n';
  }
}

}  // namespace rrgroup
