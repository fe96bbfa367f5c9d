#include "rrgroup/root_order.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "rrgroup/errors.hpp"

namespace rrgroup {

namespace {

void require_height(int h) {
  if (h < 1) throw InputError("height must be at least 1, got " + std::to_string(h));
}

std::uint64_t to_u64(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

BigInt geometric_sum(const BigInt& ratio, int terms) {
  BigInt sum = 0;
  BigInt power = 1;
  for (int t = 0; t < terms; ++t) {
    sum += power;
    power *= ratio;
  }
  return sum;
}

BigInt closed_form_first(int alpha, int beta, int h) {
  const BigInt ab = BigInt(alpha) * beta;
  if (h % 2 == 0) return geometric_sum(ab, h / 2) * (alpha + 1) * beta + 1;
  return geometric_sum(ab, h / 2 + 1) * (alpha + 1);
}

// Escape prefix of the cone below x, of length n, under configuration c.
Bits prefix_below(const WiredTree& w, const RotorConfig& c, Vertex x, std::size_t n) {
  Counts sum(n, 0);
  const auto slots = w.rotor_sequence(x);
  for (int k = 1; k < static_cast<int>(slots.size()); ++k) {
    const Vertex y = slots[k];
    Bits child = y == w.sink() ? Bits(n, 1) : prefix_below(w, c, y, n);
    if (k <= c.rotor[x]) child = shift(child);
    accumulate(sum, child);
  }
  return explosion_prefix(sum, n);
}

}  // namespace

RootOrderTable root_order_recursion(const BaseGraph& g, int max_height) {
  require_height(max_height);
  const int m = g.size();
  RootOrderTable table;
  table.cells.assign(max_height, std::vector<RootOrderCell>(m));
  for (Label i = 0; i < m; ++i) {
    auto& cell = table.cells[0][i];
    cell.down = 1;
    cell.up = g.degree(i);
    cell.order = cell.down + cell.up;
  }
  for (int h = 2; h <= max_height; ++h) {
    const auto& below = table.cells[h - 2];
    for (Label i = 0; i < m; ++i) {
      BigInt down = 1;
      for (Label j : g.children(i)) down = lcm(down, below[j].order);
      Rational weight = 0;
      for (Label j = 0; j < m; ++j) {
        if (g.multiplicity(i, j) == 0) continue;
        weight += ratio(below[j].up * g.multiplicity(i, j), below[j].order);
      }
      auto& cell = table.cells[h - 1][i];
      cell.down = down;
      cell.up = require_integer(Rational(down) * weight, "root-order count S_up");
      cell.order = cell.down + cell.up;
    }
  }
  return table;
}

SimulatedRootOrder root_order_simulated(const WiredTree& w, std::uint64_t cap) {
  if (cap < 1) throw std::invalid_argument("particle cap must be at least 1");
  RotorConfig c = zero_config(w);
  SimulatedRootOrder result;
  std::uint64_t steps = 0;
  while (result.order < cap) {
    const Exit exit = route_in_place(w, c, WiredTree::root(), steps);
    ++result.order;
    ++(exit == Exit::Down ? result.down : result.up);
    if (c.rotor[WiredTree::root()] == 0 &&
        std::all_of(c.rotor.begin(), c.rotor.end(), [](std::uint16_t r) { return r == 0; })) {
      return result;
    }
  }
  throw CapExceeded("root element order exceeds " + std::to_string(cap) + " particles");
}

Bits explosion_escape(const BaseGraph& g, Label i, int h, std::uint64_t cap) {
  require_height(h);
  if (i < 0 || i >= g.size()) throw InputError("unknown type " + std::to_string(i + 1));
  const auto orders = root_order_recursion(g, h);

  // needed[t] = types whose height-t period is used.
  std::vector<std::set<Label>> needed(h + 1);
  needed[h].insert(i);
  for (int t = h; t >= 1; --t) {
    for (Label j : needed[t]) needed[t - 1].insert(g.children(j).begin(), g.children(j).end());
  }
  for (int t = 1; t <= h; ++t) {
    for (Label j : needed[t]) {
      if (orders.at(j, t).order > cap) {
        throw CapExceeded("escape period of type " + std::to_string(j + 1) + " at height " +
                          std::to_string(t) + " exceeds " + std::to_string(cap));
      }
    }
  }

  std::vector<Bits> period(g.size(), Bits{1});
  std::vector<std::uint64_t> length(g.size(), 1);
  for (int t = 1; t <= h; ++t) {
    std::vector<Bits> next(g.size());
    for (Label j : needed[t]) {
      const auto rounds = to_u64(orders.at(j, t).down);
      Counts sum(rounds, 0);
      for (Label child : g.children(j)) accumulate(sum, repeat(period[child], rounds / length[child]));
      next[j] = explosion(sum);
    }
    for (Label j : needed[t]) length[j] = next[j].size();
    period = std::move(next);
  }
  return period[i];
}

Bits explosion_escape_prefix(const WiredTree& w, const RotorConfig& c, std::size_t n) {
  if (c.rotor.size() != w.size()) throw std::invalid_argument("configuration does not match tree");
  return prefix_below(w, c, WiredTree::root(), n);
}

HittingTable hitting_probabilities(const BaseGraph& g, int max_height) {
  require_height(max_height);
  const int m = g.size();
  HittingTable table;
  table.cells.assign(max_height, std::vector<HittingCell>(m));
  for (Label i = 0; i < m; ++i) {
    table.cells[0][i].down = Rational(1, g.degree(i) + 1);
  }
  for (int h = 2; h <= max_height; ++h) {
    for (Label i = 0; i < m; ++i) {
      Rational denom = g.degree(i) + 1;
      for (Label j = 0; j < m; ++j) denom -= g.multiplicity(i, j) * table.cells[h - 2][j].down;
      table.cells[h - 1][i].down = 1 / denom;
    }
  }
  for (auto& row : table.cells) {
    for (auto& cell : row) cell.up = 1 - cell.down;
  }
  return table;
}

std::pair<BigInt, BigInt> biregular_closed_form(int alpha, int beta, int h) {
  if (alpha < 1 || beta < 1) throw InputError("bi-regular parameters must be positive");
  require_height(h);
  return {closed_form_first(alpha, beta, h), closed_form_first(beta, alpha, h)};
}

}  // namespace rrgroup
