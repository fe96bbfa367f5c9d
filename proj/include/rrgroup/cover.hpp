#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "rrgroup/base_graph.hpp"

namespace rrgroup {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

struct CoverVertex {
  Label type = 0;
  Vertex parent = kNoVertex;
  int depth = 0;
  std::vector<Vertex> children;

  bool operator==(const CoverVertex&) const = default;
};

/// Truncated directed cover of height h rooted at a vertex of type `root_type`.
///
/// Vertices are numbered breadth first with children in generation-function
/// order, so index 0 is the root and the height-h leaves occupy the tail.
class CoverTree {
 public:
  CoverTree(Label root_type, int height, std::vector<CoverVertex> vertices);

  [[nodiscard]] Label root_type() const { return root_type_; }
  [[nodiscard]] int height() const { return height_; }
  [[nodiscard]] std::size_t size() const { return vertices_.size(); }
  [[nodiscard]] std::span<const CoverVertex> vertices() const { return vertices_; }
  [[nodiscard]] const CoverVertex& operator[](Vertex x) const { return vertices_[x]; }

  /// Number of vertices at depth `depth` of each type.
  [[nodiscard]] std::vector<std::uint64_t> level_counts(int depth, int types) const;

  bool operator==(const CoverTree&) const = default;

 private:
  Label root_type_;
  int height_;
  std::vector<CoverVertex> vertices_;
};

/// Number of vertices build_cover would create, saturating at UINT64_MAX.
std::uint64_t cover_size(const BaseGraph& g, Label root_type, int height);

/// Throws InputError for h < 1 or a bad label, CapExceeded if the tree would
/// have more than `cap` vertices.
CoverTree build_cover(const BaseGraph& g, Label root_type, int height,
                      std::uint64_t cap = 10'000'000);

/// Subtree of descendants of `x`, renumbered breadth first. Its height is
/// height() - depth(x). Throws std::invalid_argument for a leaf at depth h.
CoverTree cone(const CoverTree& t, Vertex x);

/// Line-oriented dump, one vertex per line: `index type parent children`.
/// Labels are 1-based, parent is `-` for the root and children are
/// comma-separated (`-` when empty). A leading `#` line carries the header.
void write_tree(std::ostream& out, const CoverTree& t);

/// Wired tree: the height-h leaves and the root's ancestor are contracted into
/// one sink. Non-sink vertices keep their CoverTree indices (0..size()-1) and
/// the sink is index size().
///
/// Each non-sink vertex x owns a rotor sequence c(x) of length d_type(x) + 1.
/// Slot 0 is the ancestor (the sink for the root), slot k the k-th child (the
/// sink when that child is a collapsed leaf). Parallel edges into the sink stay
/// separate slots.
class WiredTree {
 public:
  explicit WiredTree(const CoverTree& t);

  [[nodiscard]] std::size_t size() const { return types_.size(); }
  [[nodiscard]] Vertex sink() const { return static_cast<Vertex>(types_.size()); }
  [[nodiscard]] static constexpr Vertex root() { return 0; }
  [[nodiscard]] Label root_type() const { return types_.front(); }
  [[nodiscard]] int height() const { return height_; }

  [[nodiscard]] Label type(Vertex x) const { return types_[x]; }
  [[nodiscard]] int depth(Vertex x) const { return depths_[x]; }
  [[nodiscard]] int degree(Vertex x) const { return offsets_[x + 1] - offsets_[x]; }
  [[nodiscard]] std::span<const Vertex> rotor_sequence(Vertex x) const {
    return {targets_.data() + offsets_[x], static_cast<std::size_t>(degree(x))};
  }
  [[nodiscard]] Vertex target(Vertex x, int slot) const { return targets_[offsets_[x] + slot]; }

  /// True for the root's ancestor slot, the only exit into the lower sink.
  [[nodiscard]] static bool is_down_exit(Vertex x, int slot) { return x == root() && slot == 0; }

  /// Number of rotor slots of x that point into the sink.
  [[nodiscard]] int sink_edges(Vertex x) const;

  /// Product of all degrees, saturating at UINT64_MAX. Size of the rotor configuration space.
  [[nodiscard]] std::uint64_t configuration_count() const;

 private:
  int height_;
  std::vector<Label> types_;
  std::vector<int> depths_;
  std::vector<int> offsets_;
  std::vector<Vertex> targets_;
};

inline WiredTree wire(const CoverTree& t) { return WiredTree(t); }

}  // namespace rrgroup
