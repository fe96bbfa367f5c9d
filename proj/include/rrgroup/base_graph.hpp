#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace rrgroup {

/// Vertex label of the base graph. 0-based in memory, 1-based in files and reports.
using Label = int;

using IntMatrix = std::vector<std::vector<int>>;

/// Out-degree bound; rotor positions are stored in 16 bits.
inline constexpr long kMaxDegree = 65535;

/// Finite, strongly connected directed multigraph that generates a periodic tree.
///
/// Besides the adjacency matrix it carries the generation function: for every
/// label i an ordered list of the labels of the d_i children a vertex of type i
/// has in the cover. That order fixes the planar embedding, hence the rotor
/// sequences used by simulation. Forest and root-order counts do not depend on it.
class BaseGraph {
 public:
  /// Validates `adjacency` and `children` if given; the matrix must be square
  /// with non-negative entries and a strongly connected support. Without `children` every label lists its child
  /// labels in non-decreasing order. Throws InputError.
  static BaseGraph from_adjacency(IntMatrix adjacency,
                                  std::optional<std::vector<std::vector<Label>>> children = std::nullopt);

  [[nodiscard]] int size() const { return static_cast<int>(adjacency_.size()); }
  [[nodiscard]] int multiplicity(Label i, Label j) const { return adjacency_[i][j]; }
  [[nodiscard]] int degree(Label i) const { return static_cast<int>(children_[i].size()); }
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] std::span<const Label> children(Label i) const { return children_[i]; }
  [[nodiscard]] const IntMatrix& adjacency() const { return adjacency_; }

  /// Relabels vertices: new label p[i] takes the role of old label i.
  /// Child lists are rebuilt in canonical order.
  [[nodiscard]] BaseGraph permuted(std::span<const Label> p) const;

  bool operator==(const BaseGraph&) const = default;

 private:
  BaseGraph(IntMatrix adjacency, std::vector<std::vector<Label>> children)
      : adjacency_(std::move(adjacency)), children_(std::move(children)) {}

  IntMatrix adjacency_;
  std::vector<std::vector<Label>> children_;
};

/// Parses a JSON graph document:
///   { "m": 2, "adjacency": [[0,1],[1,1]], "chi": { "2": [2, 1] } }
/// "chi" is optional and may list only some labels. Labels are 1-based.
BaseGraph load_graph(std::istream& in);
BaseGraph load_graph(std::string_view document);
BaseGraph load_graph_file(const std::filesystem::path& path);

/// Presets: "fibonacci" and "biregular:a,b".
std::optional<BaseGraph> preset_graph(std::string_view name);
BaseGraph fibonacci_graph();
BaseGraph biregular_graph(int alpha, int beta);

/// Forward and reverse reachability from vertex 0 over the support of `adjacency`.
bool is_strongly_connected(const IntMatrix& adjacency);
inline bool is_strongly_connected(const BaseGraph& g) { return is_strongly_connected(g.adjacency()); }

struct SpectralResult {
  double rho = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;  ///< ||D v - rho v||_inf / ||v||_inf at return
};

/// Perron-Frobenius eigenvalue by power iteration on D + I from the all-ones
/// vector. Throws ConvergenceError after `max_iter`.
SpectralResult spectral_radius(const BaseGraph& g, double tolerance = 1e-12,
                               std::size_t max_iter = 1'000'000);

/// Uniformly draws a strongly connected graph with size in [1, max_size] and
/// entries in [0, max_entry] by rejection.
template <class Rng>
BaseGraph random_strongly_connected(Rng& rng, int max_size, int max_entry) {
  std::uniform_int_distribution<int> size_dist(1, max_size);
  std::uniform_int_distribution<int> entry_dist(0, max_entry);
  for (;;) {
    const int m = size_dist(rng);
    IntMatrix adjacency(m, std::vector<int>(m));
    for (auto& row : adjacency) {
      for (auto& entry : row) entry = entry_dist(rng);
    }
    bool dead_label = false;
    for (const auto& row : adjacency) {
      int degree = 0;
      for (int entry : row) degree += entry;
      dead_label = dead_label || degree == 0;
    }
    if (!dead_label && is_strongly_connected(adjacency)) return BaseGraph::from_adjacency(std::move(adjacency));
  }
}

}  // namespace rrgroup
