#include <algorithm>

#include <gtest/gtest.h>

#include "rrgroup/errors.hpp"
#include "rrgroup/root_order.hpp"
#include "support/gen.hpp"

namespace rrgroup {
namespace {

using testing::for_all;
using testing::Gen;

struct Row {
  long down;
  long up;
  long order;
};

void expect_rows(const BaseGraph& g, Label i, const std::vector<Row>& rows) {
  const auto t = root_order_recursion(g, static_cast<int>(rows.size()));
  for (int h = 1; h <= static_cast<int>(rows.size()); ++h) {
    SCOPED_TRACE("h=" + std::to_string(h));
    EXPECT_EQ(t.at(i, h).down, rows[h - 1].down);
    EXPECT_EQ(t.at(i, h).up, rows[h - 1].up);
    EXPECT_EQ(t.at(i, h).order, rows[h - 1].order);
  }
}

TEST(RootOrder, FibonacciValues) {
  const auto g = fibonacci_graph();
  expect_rows(g, 0, {{1, 1, 2}, {3, 2, 5}, {13, 7, 20}, {126, 61, 187}, {2311, 1051, 3362}});
  expect_rows(g, 1, {{1, 2, 3}, {6, 7, 13}, {65, 61, 126}, {1260, 1051, 2311}, {432157, 337508, 769665}});
}

TEST(RootOrder, BiregularValues) {
  const auto g = biregular_graph(2, 3);
  expect_rows(g, 0, {{1, 2, 3}, {4, 6, 10}, {9, 12, 21}, {28, 36, 64}, {57, 72, 129}});
  expect_rows(g, 1, {{1, 3, 4}, {3, 6, 9}, {10, 18, 28}, {21, 36, 57}, {64, 108, 172}});
}

TEST(RootOrder, SimulationMatchesRecursion) {
  for (const auto& g : {fibonacci_graph(), biregular_graph(2, 3)}) {
    const auto t = root_order_recursion(g, 5);
    for (Label i = 0; i < 2; ++i) {
      for (int h = 1; h <= 5; ++h) {
        SCOPED_TRACE("type=" + std::to_string(i + 1) + " h=" + std::to_string(h));
        const auto sim = root_order_simulated(wire(build_cover(g, i, h)));
        EXPECT_EQ(t.at(i, h).order, static_cast<unsigned long>(sim.order));
        EXPECT_EQ(t.at(i, h).down, static_cast<unsigned long>(sim.down));
        EXPECT_EQ(t.at(i, h).up, static_cast<unsigned long>(sim.up));
      }
    }
  }
}

TEST(RootOrder, PeriodIsMinimal) {
  // The configuration is zero again after R particles and at no earlier count.
  const auto w = wire(build_cover(fibonacci_graph(), 1, 3));
  auto c = zero_config(w);
  std::uint64_t steps = 0;
  for (int k = 1; k <= 126; ++k) {
    route_in_place(w, c, WiredTree::root(), steps);
    EXPECT_EQ(c == zero_config(w), k == 126) << k;
  }
}

TEST(RootOrder, SimulationCap) {
  EXPECT_THROW(root_order_simulated(wire(build_cover(fibonacci_graph(), 1, 3)), 5), CapExceeded);
  EXPECT_THROW(root_order_simulated(wire(build_cover(fibonacci_graph(), 1, 1)), 0), std::invalid_argument);
}

TEST(Explosion, HeightOne) {
  for (const auto& g : {fibonacci_graph(), biregular_graph(2, 3)}) {
    for (Label i = 0; i < 2; ++i) {
      Bits expected(g.degree(i), 1);
      expected.push_back(0);
      EXPECT_EQ(explosion_escape(g, i, 1), expected);
    }
  }
}

TEST(Explosion, FibonacciTypeTwoHeightTwo) {
  EXPECT_EQ(to_bit_string(explosion_escape(fibonacci_graph(), 1, 2)), "1101010101100");
}

TEST(Explosion, MatchesSimulation) {
  for (const auto& g : {fibonacci_graph(), biregular_graph(2, 3)}) {
    for (Label i = 0; i < 2; ++i) {
      for (int h = 1; h <= 4; ++h) {
        const auto formula = explosion_escape(g, i, h);
        const auto w = wire(build_cover(g, i, h));
        const auto [simulated, last] = escape_sequence(w, zero_config(w), formula.size());
        EXPECT_EQ(formula, simulated) << "type=" << i + 1 << " h=" << h;
        EXPECT_EQ(last, zero_config(w));
        const auto t = root_order_recursion(g, h).at(i, h);
        EXPECT_EQ(t.up, static_cast<long>(std::count(formula.begin(), formula.end(), 1)));
      }
    }
  }
}

TEST(Explosion, Errors) {
  EXPECT_THROW(explosion_escape(fibonacci_graph(), 1, 4, 100), CapExceeded);
  EXPECT_THROW(explosion_escape(fibonacci_graph(), 2, 1), InputError);
  EXPECT_THROW(explosion_escape(fibonacci_graph(), 0, 0), InputError);
}

TEST(Hitting, Values) {
  const auto t = hitting_probabilities(fibonacci_graph(), 3);
  EXPECT_EQ(t.at(0, 1).down, Rational(1, 2));
  EXPECT_EQ(t.at(1, 1).down, Rational(1, 3));
  EXPECT_EQ(t.at(0, 2).down, Rational(3, 5));
  EXPECT_EQ(t.at(1, 2).down, Rational(6, 13));
  EXPECT_EQ(t.at(1, 3).down, Rational(65, 126));
  EXPECT_EQ(t.at(1, 3).up, Rational(61, 126));
  EXPECT_THROW(hitting_probabilities(fibonacci_graph(), 0), InputError);
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(biregular_closed_form(2, 3, 1).first, 3);
  EXPECT_EQ(biregular_closed_form(2, 3, 2).first, 10);
  EXPECT_EQ(biregular_closed_form(2, 3, 2).second, 9);
  EXPECT_EQ(biregular_closed_form(1, 1, 5).first, 6);
  EXPECT_THROW(biregular_closed_form(0, 3, 2), InputError);
  EXPECT_THROW(biregular_closed_form(2, 3, 0), InputError);
}

TEST(ClosedForm, SweepAgainstRecursion) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const auto t = root_order_recursion(biregular_graph(a, b), 12);
      for (int h = 1; h <= 12; ++h) {
        const auto [r1, r2] = biregular_closed_form(a, b, h);
        EXPECT_EQ(r1, t.at(0, h).order) << a << "," << b << " h=" << h;
        EXPECT_EQ(r2, t.at(1, h).order) << a << "," << b << " h=" << h;
      }
      EXPECT_EQ(t.at(0, 1).order, a + 1);
    }
  }
}

TEST(ClosedForm, TwoTermRecurrence) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      auto r = [&](int h) {
        return h == 0 ? std::pair<BigInt, BigInt>{1, 1} : biregular_closed_form(a, b, h);
      };
      for (int h = 2; h <= 12; ++h) {
        EXPECT_EQ(r(h).first, r(h - 1).second * (a + 1) - a * r(h - 2).first);
        EXPECT_EQ(r(h).second, r(h - 1).first * (b + 1) - b * r(h - 2).second);
      }
    }
  }
}

TEST(RootOrderProperty, HittingIdentityAndAlternativeSystem) {
  for_all(40, [](Gen& gen, int) {
    const auto g = gen.graph(3, 3);
    const int hmax = 7;
    const auto hit = hitting_probabilities(g, hmax);
    const auto t = root_order_recursion(g, hmax);
    for (int h = 1; h <= hmax; ++h) {
      for (Label i = 0; i < g.size(); ++i) {
        const auto& c = t.at(i, h);
        EXPECT_EQ(hit.at(i, h).down, ratio(c.down, c.order));
        EXPECT_EQ(hit.at(i, h).down + hit.at(i, h).up, 1);
        EXPECT_GT(hit.at(i, h).down, 0);
        Rational inner = g.degree(i) + 1;
        for (Label j = 0; j < g.size() && h > 1; ++j) {
          inner -= g.multiplicity(i, j) * ratio(t.at(j, h - 1).down, t.at(j, h - 1).order);
        }
        EXPECT_EQ(ratio(c.down, c.order) * inner, 1);
        if (h > 1) {
          BigInt common = 1;
          for (Label j : g.children(i)) common = lcm(common, t.at(j, h - 1).order);
          EXPECT_EQ(c.down, common);
        }
      }
    }
  });
}

TEST(RootOrderProperty, ExplosionOnRandomGraphs) {
  int compared = 0;
  for_all(20, [&](Gen& gen, int) {
    const auto g = gen.graph(3, 2);
    const Label i = gen.label(g);
    const int h = gen.integer(1, 3);
    if (root_order_recursion(g, h).at(i, h).order > 2'000'000) return;
    const auto formula = explosion_escape(g, i, h);
    const auto w = wire(build_cover(g, i, h));
    EXPECT_EQ(formula, escape_sequence(w, zero_config(w), formula.size()).first);
    ++compared;
  });
  EXPECT_GE(compared, 15);
}

TEST(RootOrderProperty, ExplosionWithArbitraryConfiguration) {
  for_all(60, [](Gen& gen, int) {
    const auto g = gen.graph(3, 2);
    const auto w = wire(build_cover(g, gen.label(g), gen.integer(1, 3)));
    const auto c = gen.config(w);
    const auto n = static_cast<std::size_t>(gen.integer(1, 80));
    EXPECT_EQ(explosion_escape_prefix(w, c, n), escape_sequence(w, c, n).first);
  });
}

TEST(RootOrderProperty, SimulationOnRandomGraphs) {
  for_all(30, [](Gen& gen, int) {
    const auto g = gen.graph(3, 2);
    const Label i = gen.label(g);
    const int h = gen.integer(1, 3);
    const auto t = root_order_recursion(g, h).at(i, h);
    if (t.order > 200'000) return;
    const auto sim = root_order_simulated(wire(build_cover(g, i, h)));
    EXPECT_EQ(t.order, static_cast<unsigned long>(sim.order));
    EXPECT_EQ(t.down, static_cast<unsigned long>(sim.down));
  });
}

}  // namespace
}  // namespace rrgroup
