#include <cmath>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "rrgroup/base_graph.hpp"
#include "rrgroup/errors.hpp"
#include "support/gen.hpp"

namespace rrgroup {
namespace {

using testing::for_all;
using testing::Gen;

TEST(BaseGraph, FibonacciPreset) {
  const auto g = fibonacci_graph();
  EXPECT_EQ(g.adjacency(), (IntMatrix{{0, 1}, {1, 1}}));
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(std::vector<Label>(g.children(1).begin(), g.children(1).end()), (std::vector<Label>{0, 1}));
  EXPECT_EQ(g.max_degree(), 2);
}

TEST(BaseGraph, BiregularPreset) {
  const auto g = biregular_graph(2, 3);
  EXPECT_EQ(g.adjacency(), (IntMatrix{{0, 2}, {3, 0}}));
  EXPECT_EQ(std::vector<Label>(g.children(1).begin(), g.children(1).end()), (std::vector<Label>{0, 0, 0}));
  EXPECT_EQ(*preset_graph("biregular:2,3"), g);
  EXPECT_EQ(*preset_graph("fibonacci"), fibonacci_graph());
  EXPECT_FALSE(preset_graph("petersen").has_value());
  EXPECT_THROW(preset_graph("biregular:2"), InputError);
  EXPECT_THROW(preset_graph("biregular:0,3"), InputError);
}

TEST(BaseGraph, RejectsInvalidAdjacency) {
  EXPECT_THROW(BaseGraph::from_adjacency({}), InputError);
  EXPECT_THROW(BaseGraph::from_adjacency({{1, 1}}), InputError);
  EXPECT_THROW(BaseGraph::from_adjacency({{1, -1}, {1, 1}}), InputError);
  EXPECT_THROW(BaseGraph::from_adjacency({{0, 0}, {1, 1}}), InputError);
  EXPECT_THROW(BaseGraph::from_adjacency({{1, 1}, {0, 1}}), InputError);
  EXPECT_THROW(BaseGraph::from_adjacency({{0}}), InputError);
  EXPECT_THROW(BaseGraph::from_adjacency({{70000}}), InputError);
}

TEST(BaseGraph, ExplicitChildOrder) {
  const auto g = BaseGraph::from_adjacency({{0, 1}, {1, 1}}, std::vector<std::vector<Label>>{{}, {1, 0}});
  EXPECT_EQ(std::vector<Label>(g.children(1).begin(), g.children(1).end()), (std::vector<Label>{1, 0}));
  EXPECT_EQ(std::vector<Label>(g.children(0).begin(), g.children(0).end()), (std::vector<Label>{1}));
  EXPECT_THROW(BaseGraph::from_adjacency({{0, 1}, {1, 1}}, std::vector<std::vector<Label>>{{1}}), InputError);
  EXPECT_THROW(BaseGraph::from_adjacency({{0, 1}, {1, 1}}, std::vector<std::vector<Label>>{{1}, {1, 1}}),
               InputError);
  EXPECT_THROW(BaseGraph::from_adjacency({{0, 1}, {1, 1}}, std::vector<std::vector<Label>>{{2}, {}}),
               InputError);
}

TEST(BaseGraph, LoadsJsonDocument) {
  const auto g = load_graph(R"({"m": 2, "adjacency": [[0, 1], [1, 1]], "chi": {"2": [2, 1]}})");
  EXPECT_EQ(g.adjacency(), fibonacci_graph().adjacency());
  EXPECT_EQ(g.children(1)[0], 1);
  EXPECT_EQ(g.children(1)[1], 0);
  EXPECT_EQ(load_graph(R"({"adjacency": [[0, 2], [3, 0]]})"), biregular_graph(2, 3));
}

TEST(BaseGraph, RejectsMalformedJson) {
  EXPECT_THROW(load_graph("{"), InputError);
  EXPECT_THROW(load_graph("[]"), InputError);
  EXPECT_THROW(load_graph(R"({"adjacency": "x"})"), InputError);
  EXPECT_THROW(load_graph(R"({"m": 3, "adjacency": [[0, 1], [1, 1]]})"), InputError);
  EXPECT_THROW(load_graph(R"({"adjacency": [[0, 1], [1, 1]], "chi": {"0": [1]}})"), InputError);
  EXPECT_THROW(load_graph(R"({"adjacency": [[0, 1], [1, 1]], "chi": {"3": [1]}})"), InputError);
  EXPECT_THROW(load_graph(R"({"adjacency": [[0, 1], [1, 1]], "chi": {"two": [1]}})"), InputError);
  EXPECT_THROW(load_graph_file("/nonexistent/graph.json"), InputError);
}

TEST(BaseGraph, LoadsFile) {
  const auto path = std::filesystem::temp_directory_path() / "rrgroup_base_graph_test.json";
  {
    std::ofstream out(path);
    out << R"({"adjacency": [[1, 1], [1, 0]]})";
  }
  const auto g = load_graph_file(path);
  std::filesystem::remove(path);
  EXPECT_EQ(g.adjacency(), (IntMatrix{{1, 1}, {1, 0}}));
}

TEST(Spectral, ExampleGraphs) {
  const auto fib = spectral_radius(fibonacci_graph());
  EXPECT_NEAR(fib.rho, (1 + std::sqrt(5.0)) / 2, 1e-9);
  EXPECT_LT(fib.residual, 1e-9);
  EXPECT_NEAR(spectral_radius(biregular_graph(2, 3)).rho, std::sqrt(6.0), 1e-9);
}

TEST(Spectral, PeriodicAndCriticalGraphs) {
  EXPECT_NEAR(spectral_radius(BaseGraph::from_adjacency({{0, 1}, {1, 0}})).rho, 1.0, 1e-9);
  EXPECT_NEAR(spectral_radius(BaseGraph::from_adjacency({{1}})).rho, 1.0, 1e-12);
  EXPECT_NEAR(spectral_radius(BaseGraph::from_adjacency({{3}})).rho, 3.0, 1e-12);
  EXPECT_THROW(spectral_radius(fibonacci_graph(), 0.0), std::invalid_argument);
  EXPECT_THROW(spectral_radius(biregular_graph(2, 3), 1e-15, 2), ConvergenceError);
}

TEST(StrongConnectivity, Basics) {
  EXPECT_TRUE(is_strongly_connected(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  EXPECT_FALSE(is_strongly_connected(IntMatrix{{0, 1, 0}, {0, 0, 1}, {0, 1, 0}}));
  EXPECT_FALSE(is_strongly_connected(IntMatrix{}));
}

TEST(BaseGraphProperty, SpectralRadiusBetweenRowSums) {
  for_all(100, [](Gen& gen, int) {
    const auto g = gen.graph(4, 3);
    const auto s = spectral_radius(g);
    int lo = g.degree(0);
    int hi = g.degree(0);
    for (Label i = 1; i < g.size(); ++i) {
      lo = std::min(lo, g.degree(i));
      hi = std::max(hi, g.degree(i));
    }
    EXPECT_GE(s.rho, lo - 1e-9);
    EXPECT_LE(s.rho, hi + 1e-9);
    EXPECT_LT(s.residual, 1e-9);
  });
}

TEST(BaseGraphProperty, RelabelInvariance) {
  for_all(100, [](Gen& gen, int) {
    const auto g = gen.graph(4, 3);
    const auto p = gen.permutation(g.size());
    const auto q = g.permuted(p);
    for (Label i = 0; i < g.size(); ++i) {
      for (Label j = 0; j < g.size(); ++j) EXPECT_EQ(q.multiplicity(p[i], p[j]), g.multiplicity(i, j));
      EXPECT_EQ(q.degree(p[i]), g.degree(i));
    }
    EXPECT_NEAR(spectral_radius(q).rho, spectral_radius(g).rho, 1e-9);
  });
}

TEST(BaseGraphProperty, GeneratedGraphsAreValid) {
  for_all(200, [](Gen& gen, int) {
    const auto g = gen.graph(3, 2);
    EXPECT_TRUE(is_strongly_connected(g));
    for (Label i = 0; i < g.size(); ++i) EXPECT_GT(g.degree(i), 0);
  });
}

}  // namespace
}  // namespace rrgroup
