#include "rrgroup/base_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rrgroup/errors.hpp"

namespace rrgroup {

namespace {

std::vector<Label> canonical_children(const std::vector<int>& row) {
  std::vector<Label> children;
  for (Label j = 0; j < static_cast<Label>(row.size()); ++j) {
    children.insert(children.end(), row[j], j);
  }
  return children;
}

std::vector<bool> reachable(const IntMatrix& adjacency, bool reverse) {
  const auto m = adjacency.size();
  std::vector<bool> seen(m, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < m; ++j) {
      const int edges = reverse ? adjacency[j][i] : adjacency[i][j];
      if (edges > 0 && !seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return seen;
}

int parse_positive(std::string_view text) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
    throw InputError("expected a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

BaseGraph BaseGraph::from_adjacency(IntMatrix adjacency,
                                    std::optional<std::vector<std::vector<Label>>> children) {
  const auto m = adjacency.size();
  if (m == 0) throw InputError("adjacency matrix is empty");
  for (const auto& row : adjacency) {
    if (row.size() != m) throw InputError("adjacency matrix is not square");
    for (int entry : row) {
      if (entry < 0) throw InputError("adjacency matrix has a negative entry");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    long degree = 0;
    for (int entry : adjacency[i]) degree += entry;
    if (degree == 0) throw InputError("label " + std::to_string(i + 1) + " has no children");
    if (degree >= kMaxDegree) throw InputError("label " + std::to_string(i + 1) + " has too many children");
  }
  if (!is_strongly_connected(adjacency)) throw InputError("graph is not strongly connected");

  if (children && children->size() != m) throw InputError("chi has the wrong number of labels");
  std::vector<std::vector<Label>> chi(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!children || (*children)[i].empty()) {
      chi[i] = canonical_children(adjacency[i]);
      continue;
    }
    const auto& listed = (*children)[i];
    std::vector<int> counts(m, 0);
    for (Label j : listed) {
      if (j < 0 || j >= static_cast<Label>(m)) {
        throw InputError("chi of label " + std::to_string(i + 1) + " names an unknown label");
      }
      ++counts[j];
    }
    if (counts != adjacency[i]) {
      throw InputError("chi of label " + std::to_string(i + 1) + " disagrees with adjacency row");
    }
    chi[i] = listed;
  }
  return BaseGraph(std::move(adjacency), std::move(chi));
}

int BaseGraph::max_degree() const {
  int best = 0;
  for (const auto& c : children_) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

BaseGraph BaseGraph::permuted(std::span<const Label> p) const {
  const int m = size();
  IntMatrix adjacency(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) adjacency[p[i]][p[j]] = adjacency_[i][j];
  }
  return from_adjacency(std::move(adjacency));
}

bool is_strongly_connected(const IntMatrix& adjacency) {
  if (adjacency.empty()) return false;
  const auto forward = reachable(adjacency, false);
  const auto backward = reachable(adjacency, true);
  return std::all_of(forward.begin(), forward.end(), [](bool b) { return b; }) &&
         std::all_of(backward.begin(), backward.end(), [](bool b) { return b; });
}

BaseGraph load_graph(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("graph document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("adjacency")) {
    throw InputError("graph document needs an \"adjacency\" field");
  }
  IntMatrix adjacency;
  std::optional<std::vector<std::vector<Label>>> chi;
  try {
    adjacency = doc.at("adjacency").get<IntMatrix>();
    const auto m = adjacency.size();
    if (doc.contains("m") && doc.at("m").get<std::size_t>() != m) {
      throw InputError("\"m\" does not match the adjacency matrix");
    }
    if (doc.contains("chi") && !doc.at("chi").is_null()) {
      chi.emplace(m);
      for (const auto& [key, value] : doc.at("chi").items()) {
        const int label = parse_positive(key);
        if (static_cast<std::size_t>(label) > m) throw InputError("chi names unknown label " + key);
        for (int child : value.get<std::vector<int>>()) (*chi)[label - 1].push_back(child - 1);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph document: ") + e.what());
  }
  return BaseGraph::from_adjacency(std::move(adjacency), std::move(chi));
}

BaseGraph load_graph(std::string_view document) {
  std::istringstream in{std::string(document)};
  return load_graph(in);
}

BaseGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path.string());
  return load_graph(in);
}

BaseGraph fibonacci_graph() { return BaseGraph::from_adjacency({{0, 1}, {1, 1}}); }

BaseGraph biregular_graph(int alpha, int beta) {
  return BaseGraph::from_adjacency({{0, alpha}, {beta, 0}});
}

std::optional<BaseGraph> preset_graph(std::string_view name) {
  if (name == "fibonacci") return fibonacci_graph();
  constexpr std::string_view prefix = "biregular:";
  if (name.starts_with(prefix)) {
    const auto args = name.substr(prefix.size());
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw InputError("preset biregular needs two parameters a,b");
    return biregular_graph(parse_positive(args.substr(0, comma)), parse_positive(args.substr(comma + 1)));
  }
  return std::nullopt;
}

SpectralResult spectral_radius(const BaseGraph& g, double tolerance, std::size_t max_iter) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const int m = g.size();
  const auto& d = g.adjacency();
  std::vector<double> v(m, 1.0);
  std::vector<double> next(m);
  SpectralResult result;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    // (D + I) v, rescaled to unit sup-norm.
    double norm = 0.0;
    for (int i = 0; i < m; ++i) {
      double sum = v[i];
      for (int j = 0; j < m; ++j) sum += d[i][j] * v[j];
      next[i] = sum;
      norm = std::max(norm, std::abs(sum));
    }
    for (int i = 0; i < m; ++i) v[i] = next[i] / norm;

    // Collatz-Wielandt bracket on D itself.
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int i = 0; i < m; ++i) {
      double sum = 0.0;
      for (int j = 0; j < m; ++j) sum += d[i][j] * v[j];
      next[i] = sum;
      lo = std::min(lo, sum / v[i]);
      hi = std::max(hi, sum / v[i]);
    }
    result.rho = 0.5 * (lo + hi);
    result.iterations = it;
    result.residual = 0.0;
    for (int i = 0; i < m; ++i) {
      result.residual = std::max(result.residual, std::abs(next[i] - result.rho * v[i]));
    }
    if (result.residual < tolerance) return result;
  }
  throw ConvergenceError("power iteration did not reach tolerance in " + std::to_string(max_iter) +
                         " iterations");
}

}  // namespace rrgroup
