#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rrgroup/base_graph.hpp"
#include "rrgroup/cover.hpp"
#include "rrgroup/numeric.hpp"
#include "rrgroup/rotor.hpp"
#include "rrgroup/sequence.hpp"

namespace rrgroup {

/// Particles routed from the root until the configuration repeats (`order`),
/// split by the sink they stopped in.
struct RootOrderCell {
  BigInt down;
  BigInt up;
  BigInt order;
};

/// `cells[h - 1][i]` for h = 1..max_height.
struct RootOrderTable {
  std::vector<std::vector<RootOrderCell>> cells;

  [[nodiscard]] const RootOrderCell& at(Label i, int h) const { return cells[h - 1][i]; }
  [[nodiscard]] int max_height() const { return static_cast<int>(cells.size()); }
};

/// down_i^h = lcm of the children's orders (folded in child order),
/// up_i^h = down_i^h * sum_j d_ij up_j^{h-1} / R_j^{h-1}, starting from (1, d_i).
RootOrderTable root_order_recursion(const BaseGraph& g, int max_height);

struct SimulatedRootOrder {
  std::uint64_t order = 0;
  std::uint64_t down = 0;
  std::uint64_t up = 0;
};

/// Routes particles from the root, starting at the zero configuration, until
/// the configuration first returns to zero. Throws CapExceeded after `cap`
/// particles.
SimulatedRootOrder root_order_simulated(const WiredTree& w, std::uint64_t cap = 10'000'000);

/// One period of the escape sequence from the zero configuration, assembled
/// bottom-up from the children's periods with the explosion operator. Throws
/// CapExceeded if a period is longer than `cap`.
Bits explosion_escape(const BaseGraph& g, Label i, int h, std::uint64_t cap = 10'000'000);

/// First `n` escape bits of `w` under an arbitrary configuration, from the
/// explosion formula: children the root rotor has already passed get one
/// round of delay (the shift) before their sequences are summed.
Bits explosion_escape_prefix(const WiredTree& w, const RotorConfig& c, std::size_t n);

struct HittingCell {
  Rational down;
  Rational up;
};

/// Exit probabilities of simple random walk from the root of the truncated
/// cover; `cells[h - 1][i]`.
struct HittingTable {
  std::vector<std::vector<HittingCell>> cells;

  [[nodiscard]] const HittingCell& at(Label i, int h) const { return cells[h - 1][i]; }
};

/// 1 = H_i^h (d_i + 1 - sum_j d_ij H_j^{h-1}) with H_i^1 = 1 / (d_i + 1).
HittingTable hitting_probabilities(const BaseGraph& g, int max_height);

/// Root-element orders (R_1^h, R_2^h) of the (alpha, beta) bi-regular tree
/// from the closed-form geometric sums.
std::pair<BigInt, BigInt> biregular_closed_form(int alpha, int beta, int h);

}  // namespace rrgroup
