#pragma once

#include <cstddef>
#include <vector>

#include "rrgroup/base_graph.hpp"
#include "rrgroup/numeric.hpp"

namespace rrgroup {

/// Spanning-forest counts of the truncated cover rooted at the two sinks.
/// `down` counts forests using the edge from the root to its ancestor, `up`
/// those joining the root to a height-h leaf. Their sum is the rotor-router
/// group order of the wired tree.
struct ForestCell {
  BigInt down;
  BigInt up;
  BigInt order;
  Rational gamma;  ///< up / down
};

/// Cells for every type and height 1..max_height. Heights are 1-based.
class ForestTable {
 public:
  ForestTable(int types, int max_height);

  [[nodiscard]] int types() const { return types_; }
  [[nodiscard]] int max_height() const { return max_height_; }
  [[nodiscard]] const ForestCell& at(Label i, int h) const { return cells_[index(i, h)]; }
  ForestCell& at(Label i, int h) { return cells_[index(i, h)]; }

 private:
  [[nodiscard]] std::size_t index(Label i, int h) const {
    return static_cast<std::size_t>(h - 1) * types_ + i;
  }

  int types_;
  int max_height_;
  std::vector<ForestCell> cells_;
};

/// Exact forest recursion from (down, up) = (1, d_i) at height 1. Every `up`
/// is checked to be integral. Throws InputError if max_height < 1.
ForestTable forest_recursion(const BaseGraph& g, int max_height);

/// Order of the rotor-router group of the wired cover of type i and height h.
BigInt group_order(const BaseGraph& g, Label i, int h);

/// gamma[h - 1][i] for h = 1..max_height, computed from its own recursion
/// gamma_i^h = sum_j d_ij gamma_j^{h-1} / (1 + gamma_j^{h-1}), gamma_i^1 = d_i.
std::vector<std::vector<Rational>> gamma_sequence(const BaseGraph& g, int max_height);

struct FixedPoint {
  std::vector<double> upsilon;
  double residual = 0.0;  ///< sup-norm of f(upsilon) - upsilon
  bool converged = false;
  std::size_t iterations = 0;
};

/// Iterates f_i(x) = sum_j d_ij x_j / (1 + x_j) from x = (d_1, ..., d_m) until
/// the sup-norm change drops below `tolerance`. On hitting `max_iter` returns
/// the last iterate with converged = false.
FixedPoint fixed_point(const BaseGraph& g, double tolerance = 1e-12,
                       std::size_t max_iter = 1'000'000);

/// Floating-point forest recursion in the log domain:
///   x_i^h = sum_j d_ij (x_j^{h-1} + log(1 + gamma_j^{h-1})),  x^1 = 0,
/// where x = log(down). log|RR| = x + log(1 + gamma).
struct LogForestTable {
  std::vector<std::vector<double>> log_down;   ///< [h - 1][i]
  std::vector<std::vector<double>> gamma;      ///< [h - 1][i]
  std::vector<std::vector<double>> log_order;  ///< [h - 1][i]
};

LogForestTable log_forest_recursion(const BaseGraph& g, int max_height);

struct SlopeReport {
  std::vector<double> slopes;  ///< per type
  double target = 0.0;         ///< log rho(D)
  double max_relative_error = 0.0;
  int min_height = 0;
  int max_height = 0;
};

/// Least-squares slope of log log|RR| against h over [min_height, max_height]
/// for every type. Throws UnsupportedRegime if rho(D) <= 1 + 1e-9 and
/// InputError unless 2 <= min_height < max_height.
SlopeReport asymptotic_slope(const BaseGraph& g, int min_height, int max_height);

}  // namespace rrgroup
