#include "rrgroup/cover.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "rrgroup/errors.hpp"

namespace rrgroup {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

}  // namespace

CoverTree::CoverTree(Label root_type, int height, std::vector<CoverVertex> vertices)
    : root_type_(root_type), height_(height), vertices_(std::move(vertices)) {}

std::vector<std::uint64_t> CoverTree::level_counts(int depth, int types) const {
  std::vector<std::uint64_t> counts(types, 0);
  for (const auto& v : vertices_) {
    if (v.depth == depth) ++counts[v.type];
  }
  return counts;
}

std::uint64_t cover_size(const BaseGraph& g, Label root_type, int height) {
  const int m = g.size();
  std::vector<std::uint64_t> level(m, 0);
  level[root_type] = 1;
  std::uint64_t total = 1;
  for (int depth = 1; depth <= height; ++depth) {
    std::vector<std::uint64_t> next(m, 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        next[j] = saturating_add(next[j], saturating_mul(level[i], g.multiplicity(i, j)));
      }
    }
    level = std::move(next);
    for (auto count : level) total = saturating_add(total, count);
  }
  return total;
}

CoverTree build_cover(const BaseGraph& g, Label root_type, int height, std::uint64_t cap) {
  if (height < 1) throw InputError("tree height must be at least 1");
  if (root_type < 0 || root_type >= g.size()) {
    throw InputError("root type " + std::to_string(root_type + 1) + " is not a label of the graph");
  }
  const auto projected = cover_size(g, root_type, height);
  if (projected > cap) {
    throw CapExceeded("cover tree would have " + std::to_string(projected) + " vertices (cap " +
                      std::to_string(cap) + ")");
  }

  std::vector<CoverVertex> vertices;
  vertices.reserve(projected);
  vertices.push_back({root_type, kNoVertex, 0, {}});
  for (std::size_t x = 0; x < vertices.size(); ++x) {
    if (vertices[x].depth == height) continue;
    const Label type = vertices[x].type;
    const int depth = vertices[x].depth + 1;
    for (Label child_type : g.children(type)) {
      const auto child = static_cast<Vertex>(vertices.size());
      vertices.push_back({child_type, static_cast<Vertex>(x), depth, {}});
      vertices[x].children.push_back(child);
    }
  }
  return CoverTree(root_type, height, std::move(vertices));
}

CoverTree cone(const CoverTree& t, Vertex x) {
  const auto& apex = t[x];
  if (apex.depth >= t.height()) throw std::invalid_argument("cone of a height-h leaf is empty");

  std::vector<CoverVertex> vertices;
  std::vector<Vertex> source{x};
  vertices.push_back({apex.type, kNoVertex, 0, {}});
  for (std::size_t k = 0; k < source.size(); ++k) {
    for (Vertex child : t[source[k]].children) {
      const auto renamed = static_cast<Vertex>(vertices.size());
      vertices.push_back({t[child].type, static_cast<Vertex>(k), t[child].depth - apex.depth, {}});
      vertices[k].children.push_back(renamed);
      source.push_back(child);
    }
  }
  return CoverTree(apex.type, t.height() - apex.depth, std::move(vertices));
}

void write_tree(std::ostream& out, const CoverTree& t) {
  out << "# root_type=" << t.root_type() + 1 << " height=" << t.height() << " vertices=" << t.size()
      << '\n';
  for (std::size_t x = 0; x < t.size(); ++x) {
    const auto& v = t.vertices()[x];
    out << x << ' ' << v.type + 1 << ' ';
    if (v.parent == kNoVertex) {
      out << '-';
    } else {
      out << v.parent;
    }
    out << ' ';
    if (v.children.empty()) out << '-';
    for (std::size_t k = 0; k < v.children.size(); ++k) {
      if (k) out << ',';
      out << v.children[k];
    }
    out << '\n';
  }
}

WiredTree::WiredTree(const CoverTree& t) : height_(t.height()) {
  // Breadth-first numbering puts every depth-h leaf after all inner vertices.
  std::size_t inner = 0;
  while (inner < t.size() && t[static_cast<Vertex>(inner)].depth < t.height()) ++inner;
  const auto sink = static_cast<Vertex>(inner);

  types_.reserve(inner);
  depths_.reserve(inner);
  offsets_.reserve(inner + 1);
  offsets_.push_back(0);
  for (std::size_t x = 0; x < inner; ++x) {
    const auto& v = t[static_cast<Vertex>(x)];
    types_.push_back(v.type);
    depths_.push_back(v.depth);
    targets_.push_back(v.parent == kNoVertex ? sink : v.parent);
    for (Vertex child : v.children) {
      targets_.push_back(t[child].depth == t.height() ? sink : child);
    }
    offsets_.push_back(static_cast<int>(targets_.size()));
  }
}

int WiredTree::sink_edges(Vertex x) const {
  int count = 0;
  for (Vertex y : rotor_sequence(x)) count += (y == sink());
  return count;
}

std::uint64_t WiredTree::configuration_count() const {
  std::uint64_t total = 1;
  for (std::size_t x = 0; x < size(); ++x) {
    total = saturating_mul(total, static_cast<std::uint64_t>(degree(static_cast<Vertex>(x))));
  }
  return total;
}

}  // namespace rrgroup
