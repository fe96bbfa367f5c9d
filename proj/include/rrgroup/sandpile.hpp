#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rrgroup/cover.hpp"
#include "rrgroup/numeric.hpp"

namespace rrgroup {

struct ChipConfig {
  std::vector<std::uint64_t> chips;

  bool operator==(const ChipConfig&) const = default;
};

/// Send one chip along every rotor slot of x; chips sent to the sink vanish.
/// Throws std::invalid_argument if x holds fewer than deg(x) chips.
ChipConfig topple(const WiredTree& w, ChipConfig c, Vertex x);

/// Topple unstable vertices in FIFO order until stable.
ChipConfig stabilize(const WiredTree& w, ChipConfig c);

/// Picks which of the currently unstable vertices topples next.
using TopplePicker = std::function<std::size_t(std::span<const Vertex> unstable)>;

/// Stabilization with a caller-chosen toppling order.
ChipConfig stabilize(const WiredTree& w, ChipConfig c, const TopplePicker& pick);

bool is_stable(const WiredTree& w, const ChipConfig& c);

/// Laplacian of the wired tree with the sink row and column removed.
/// Diagonal = wired degree; off-diagonal (x, y) = -(slots of x targeting y).
struct ReducedLaplacian {
  std::vector<std::vector<std::int64_t>> matrix;
};

ReducedLaplacian reduced_laplacian(const WiredTree& w);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt det_bigint(const std::vector<std::vector<std::int64_t>>& matrix);
inline BigInt det_bigint(const ReducedLaplacian& m) { return det_bigint(m.matrix); }

/// Counts one-slot-per-vertex choices whose edges are acyclic, by exhaustive
/// enumeration. Throws CapExceeded if the choice space exceeds `cap`.
BigInt count_spanning_trees_bruteforce(const WiredTree& w, std::uint64_t cap = 10'000'000);

}  // namespace rrgroup
