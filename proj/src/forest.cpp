#include "rrgroup/forest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rrgroup/errors.hpp"

namespace rrgroup {

namespace {

void require_height(int h) {
  if (h < 1) throw InputError("height must be at least 1, got " + std::to_string(h));
}

std::vector<double> apply_map(const BaseGraph& g, const std::vector<double>& x) {
  const int m = g.size();
  std::vector<double> fx(m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) fx[i] += g.multiplicity(i, j) * (x[j] / (1.0 + x[j]));
  }
  return fx;
}

double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

ForestTable::ForestTable(int types, int max_height)
    : types_(types), max_height_(max_height), cells_(static_cast<std::size_t>(types) * max_height) {}

ForestTable forest_recursion(const BaseGraph& g, int max_height) {
  require_height(max_height);
  const int m = g.size();
  ForestTable table(m, max_height);
  for (Label i = 0; i < m; ++i) {
    auto& cell = table.at(i, 1);
    cell.down = 1;
    cell.up = g.degree(i);
    cell.order = cell.down + cell.up;
    cell.gamma = Rational(cell.up, cell.down);
  }
  for (int h = 2; h <= max_height; ++h) {
    for (Label i = 0; i < m; ++i) {
      BigInt down = 1;
      Rational weight = 0;
      for (Label j = 0; j < m; ++j) {
        const int d = g.multiplicity(i, j);
        if (d == 0) continue;
        const auto& below = table.at(j, h - 1);
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), below.order.get_mpz_t(), static_cast<unsigned long>(d));
        down *= power;
        weight += ratio(below.up * d, below.order);
      }
      auto& cell = table.at(i, h);
      cell.down = down;
      cell.up = require_integer(Rational(down) * weight, "forest count F_up");
      cell.order = cell.down + cell.up;
      cell.gamma = ratio(cell.up, cell.down);
    }
  }
  return table;
}

BigInt group_order(const BaseGraph& g, Label i, int h) {
  if (i < 0 || i >= g.size()) throw InputError("unknown type " + std::to_string(i + 1));
  return forest_recursion(g, h).at(i, h).order;
}

std::vector<std::vector<Rational>> gamma_sequence(const BaseGraph& g, int max_height) {
  require_height(max_height);
  const int m = g.size();
  std::vector<std::vector<Rational>> gamma(max_height, std::vector<Rational>(m));
  for (Label i = 0; i < m; ++i) gamma[0][i] = g.degree(i);
  for (int h = 2; h <= max_height; ++h) {
    std::vector<Rational> ratio(m);
    for (Label j = 0; j < m; ++j) ratio[j] = gamma[h - 2][j] / (1 + gamma[h - 2][j]);
    for (Label i = 0; i < m; ++i) {
      Rational sum = 0;
      for (Label j = 0; j < m; ++j) {
        if (g.multiplicity(i, j) != 0) sum += g.multiplicity(i, j) * ratio[j];
      }
      gamma[h - 1][i] = sum;
    }
  }
  return gamma;
}

FixedPoint fixed_point(const BaseGraph& g, double tolerance, std::size_t max_iter) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const int m = g.size();
  FixedPoint result;
  std::vector<double> x(m);
  for (Label i = 0; i < m; ++i) x[i] = g.degree(i);
  for (std::size_t it = 1; it <= max_iter; ++it) {
    auto next = apply_map(g, x);
    const double change = sup_distance(next, x);
    x = std::move(next);
    result.iterations = it;
    if (change < tolerance) {
      result.converged = true;
      break;
    }
  }
  result.residual = sup_distance(apply_map(g, x), x);
  result.upsilon = std::move(x);

  if (result.converged && spectral_radius(g).rho > 1.0 + 1e-9) {
    for (double u : result.upsilon) {
      if (!(u > 0.0)) throw std::logic_error("fixed point has a non-positive entry although rho(D) > 1");
    }
  }
  return result;
}

LogForestTable log_forest_recursion(const BaseGraph& g, int max_height) {
  require_height(max_height);
  const int m = g.size();
  LogForestTable t;
  t.log_down.assign(max_height, std::vector<double>(m, 0.0));
  t.gamma.assign(max_height, std::vector<double>(m, 0.0));
  t.log_order.assign(max_height, std::vector<double>(m, 0.0));
  for (Label i = 0; i < m; ++i) t.gamma[0][i] = g.degree(i);
  for (int h = 2; h <= max_height; ++h) {
    const auto& x = t.log_down[h - 2];
    const auto& gamma = t.gamma[h - 2];
    for (Label i = 0; i < m; ++i) {
      double down = 0.0;
      double next_gamma = 0.0;
      for (Label j = 0; j < m; ++j) {
        const int d = g.multiplicity(i, j);
        if (d == 0) continue;
        down += d * (x[j] + std::log1p(gamma[j]));
        next_gamma += d * (gamma[j] / (1.0 + gamma[j]));
      }
      t.log_down[h - 1][i] = down;
      t.gamma[h - 1][i] = next_gamma;
    }
  }
  for (int h = 1; h <= max_height; ++h) {
    for (Label i = 0; i < m; ++i) {
      t.log_order[h - 1][i] = t.log_down[h - 1][i] + std::log1p(t.gamma[h - 1][i]);
    }
  }
  return t;
}

SlopeReport asymptotic_slope(const BaseGraph& g, int min_height, int max_height) {
  if (min_height < 2 || max_height <= min_height) {
    throw InputError("slope needs 2 <= h_min < h_max");
  }
  const double rho = spectral_radius(g).rho;
  if (rho <= 1.0 + 1e-9) {
    throw UnsupportedRegime("doubly exponential growth needs rho(D) > 1, got " + std::to_string(rho));
  }
  const auto table = log_forest_recursion(g, max_height);
  SlopeReport report;
  report.target = std::log(rho);
  report.min_height = min_height;
  report.max_height = max_height;

  const int count = max_height - min_height + 1;
  double mean_h = 0.0;
  for (int h = min_height; h <= max_height; ++h) mean_h += h;
  mean_h /= count;
  for (Label i = 0; i < g.size(); ++i) {
    double mean_y = 0.0;
    for (int h = min_height; h <= max_height; ++h) mean_y += std::log(table.log_order[h - 1][i]);
    mean_y /= count;
    double sxy = 0.0;
    double sxx = 0.0;
    for (int h = min_height; h <= max_height; ++h) {
      const double dx = h - mean_h;
      sxy += dx * (std::log(table.log_order[h - 1][i]) - mean_y);
      sxx += dx * dx;
    }
    const double slope = sxy / sxx;
    report.slopes.push_back(slope);
    report.max_relative_error =
        std::max(report.max_relative_error, std::abs(slope - report.target) / report.target);
  }
  return report;
}

}  // namespace rrgroup
