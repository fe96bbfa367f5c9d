#include "rrgroup/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <string_view>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rrgroup/base_graph.hpp"
#include "rrgroup/cover.hpp"
#include "rrgroup/errors.hpp"
#include "rrgroup/forest.hpp"
#include "rrgroup/root_order.hpp"
#include "rrgroup/rotor.hpp"
#include "rrgroup/sandpile.hpp"
#include "rrgroup/sequence.hpp"

namespace rrgroup {

namespace {

// Largest wired tree whose determinant the report commands compute.
constexpr std::size_t kDeterminantVertices = 400;

struct NamedGraph {
  std::string name;
  BaseGraph graph;
};

struct Context {
  const RunConfig& config;
  Report& report;
  bool failed = false;

  [[nodiscard]] bool csv() const { return config.format == Format::Csv; }
};

std::vector<NamedGraph> resolve_graphs(const RunConfig& config, bool both_presets) {
  if (config.graph.empty()) {
    if (both_presets) return {{"fibonacci", fibonacci_graph()}, {"biregular:2,3", biregular_graph(2, 3)}};
    return {{"fibonacci", fibonacci_graph()}};
  }
  if (auto g = preset_graph(config.graph)) return {{config.graph, std::move(*g)}};
  return {{config.graph, load_graph_file(config.graph)}};
}

std::vector<Label> selected_types(const RunConfig& config, const BaseGraph& g) {
  if (config.type) {
    if (*config.type < 1 || *config.type > g.size()) {
      throw InputError(fmt::format("--type must be in 1..{}, got {}", g.size(), *config.type));
    }
    return {*config.type - 1};
  }
  std::vector<Label> all(g.size());
  for (Label i = 0; i < g.size(); ++i) all[i] = i;
  return all;
}

std::pair<int, int> selected_heights(const RunConfig& config, int lo, int hi) {
  return config.heights.value_or(std::pair{lo, hi});
}

std::string subject(const std::string& graph, Label i, int h) {
  return fmt::format("{} type={} h={}", graph, i + 1, h);
}

std::optional<WiredTree> small_tree(const BaseGraph& g, Label i, int h, std::uint64_t vertex_cap) {
  if (cover_size(g, i, h) > vertex_cap) return std::nullopt;
  return wire(build_cover(g, i, h, vertex_cap));
}

void add_parameters(Context& ctx, const std::string& graph) {
  auto& p = ctx.report.parameters;
  p.emplace_back("graph", cell(graph));
  if (ctx.config.type) p.emplace_back("type", cell(*ctx.config.type));
}

void group_order_command(Context& ctx, const NamedGraph& ng) {
  const auto& g = ng.graph;
  const auto [lo, hi] = selected_heights(ctx.config, 1, 4);
  const auto table = forest_recursion(g, hi);
  std::vector<std::string> columns{"type", "h", "F_down", "F_up", "order", "gamma_num", "gamma_den"};
  if (!ctx.csv()) columns.insert(columns.end(), {"determinant", "brute_force", "confirmed"});
  auto& t = ctx.report.table("group_order", columns);
  for (Label i : selected_types(ctx.config, g)) {
    for (int h = lo; h <= hi; ++h) {
      const auto& c = table.at(i, h);
      std::vector<Cell> row{cell(i + 1), cell(h), cell(c.down), cell(c.up), cell(c.order),
                            cell(BigInt(c.gamma.get_num())), cell(BigInt(c.gamma.get_den()))};
      if (!ctx.csv()) {
        std::string det = "-";
        std::string brute = "-";
        bool ok = true;
        if (auto w = small_tree(g, i, h, ctx.config.cap)) {
          if (w->size() <= kDeterminantVertices) {
            const auto d = det_bigint(reduced_laplacian(*w));
            det = d.get_str();
            ok = ok && d == c.order;
          }
          if (w->configuration_count() <= ctx.config.cap) {
            const auto b = count_spanning_trees_bruteforce(*w, ctx.config.cap);
            brute = b.get_str();
            ok = ok && b == c.order;
          }
        }
        const bool checked = det != "-" || brute != "-";
        ctx.failed = ctx.failed || !ok;
        row.insert(row.end(), {cell(det), cell(brute), cell(!checked ? "unchecked" : ok ? "yes" : "NO")});
      }
      t.add(std::move(row));
    }
  }
}

void root_order_command(Context& ctx, const NamedGraph& ng) {
  const auto& g = ng.graph;
  const auto [lo, hi] = selected_heights(ctx.config, 1, 4);
  const auto orders = root_order_recursion(g, hi);
  const auto hitting = hitting_probabilities(g, hi);
  std::vector<std::string> columns{"type", "h", "S_down", "S_up", "R", "H_down"};
  if (!ctx.csv()) columns.insert(columns.end(), {"gcd_S_down_R", "simulated", "confirmed"});
  auto& t = ctx.report.table("root_order", columns);
  for (Label i : selected_types(ctx.config, g)) {
    for (int h = lo; h <= hi; ++h) {
      const auto& c = orders.at(i, h);
      std::vector<Cell> row{cell(i + 1), cell(h), cell(c.down), cell(c.up), cell(c.order),
                            cell(hitting.at(i, h).down)};
      if (!ctx.csv()) {
        BigInt g_common;
        mpz_gcd(g_common.get_mpz_t(), c.down.get_mpz_t(), c.order.get_mpz_t());
        std::string simulated = "-";
        std::string confirmed = "unchecked";
        if (c.order <= ctx.config.cap) {
          if (auto w = small_tree(g, i, h, ctx.config.cap)) {
            const auto sim = root_order_simulated(*w, ctx.config.cap);
            simulated = fmt::format("{} ({},{})", sim.order, sim.down, sim.up);
            const bool ok = c.order == sim.order && c.down == sim.down && c.up == sim.up;
            ctx.failed = ctx.failed || !ok;
            confirmed = ok ? "yes" : "NO";
          }
        }
        row.insert(row.end(), {cell(g_common), cell(simulated), cell(confirmed)});
      }
      t.add(std::move(row));
    }
  }
}

void gamma_command(Context& ctx, const NamedGraph& ng) {
  const auto [lo, hi] = selected_heights(ctx.config, 1, 8);
  const auto gamma = gamma_sequence(ng.graph, hi);
  auto& t = ctx.report.table("gamma", {"type", "h", "gamma", "gamma_real"});
  for (Label i : selected_types(ctx.config, ng.graph)) {
    for (int h = lo; h <= hi; ++h) {
      const auto& v = gamma[h - 1][i];
      t.add({cell(i + 1), cell(h), cell(v), cell(v.get_d())});
    }
  }
}

void fixed_point_command(Context& ctx, const NamedGraph& ng) {
  const auto fp = fixed_point(ng.graph, ctx.config.tolerance);
  if (!fp.converged) {
    throw ConvergenceError(fmt::format("fixed-point iteration did not converge in {} iterations", fp.iterations));
  }
  ctx.report.parameters.emplace_back("tolerance", cell(ctx.config.tolerance));
  ctx.report.parameters.emplace_back("iterations", cell(static_cast<std::uint64_t>(fp.iterations)));
  ctx.report.parameters.emplace_back("residual", cell(fp.residual));
  auto& t = ctx.report.table("fixed_point", {"type", "upsilon"});
  for (Label i : selected_types(ctx.config, ng.graph)) t.add({cell(i + 1), cell(fp.upsilon[i])});
}

void slope_command(Context& ctx, const NamedGraph& ng) {
  const auto [lo, hi] = selected_heights(ctx.config, 10, 25);
  const auto s = asymptotic_slope(ng.graph, lo, hi);
  ctx.report.parameters.emplace_back("h_min", cell(lo));
  ctx.report.parameters.emplace_back("h_max", cell(hi));
  ctx.report.parameters.emplace_back("log_rho", cell(s.target));
  auto& t = ctx.report.table("slope", {"type", "slope", "target", "relative_error"});
  for (Label i : selected_types(ctx.config, ng.graph)) {
    t.add({cell(i + 1), cell(s.slopes[i]), cell(s.target), cell(std::abs(s.slopes[i] - s.target) / s.target)});
  }
}

void simulate_command(Context& ctx, const NamedGraph& ng) {
  const auto [lo, hi] = selected_heights(ctx.config, 1, 4);
  auto& t = ctx.report.table("simulation", {"type", "h", "vertices", "R", "S_down", "S_up"});
  bool traced = ctx.config.trace.empty();
  for (Label i : selected_types(ctx.config, ng.graph)) {
    for (int h = lo; h <= hi; ++h) {
      const auto w = wire(build_cover(ng.graph, i, h, ctx.config.cap));
      const auto sim = root_order_simulated(w, ctx.config.cap);
      t.add({cell(i + 1), cell(h), cell(static_cast<std::uint64_t>(w.size())), cell(sim.order), cell(sim.down),
             cell(sim.up)});
      if (!traced) {
        std::ofstream file(ctx.config.trace);
        if (!file) throw InputError("cannot write trace file " + ctx.config.trace);
        write_trace_csv(file, w, zero_config(w), sim.order);
        traced = true;
      }
    }
  }
}

void escape_command(Context& ctx, const NamedGraph& ng) {
  const auto [lo, hi] = selected_heights(ctx.config, 1, 3);
  std::vector<std::string> columns{"type", "h", "bits"};
  if (!ctx.csv()) columns = {"type", "h", "length", "ones", "bits"};
  auto& t = ctx.report.table("escape", columns);
  for (Label i : selected_types(ctx.config, ng.graph)) {
    for (int h = lo; h <= hi; ++h) {
      const auto bits = explosion_escape(ng.graph, i, h, ctx.config.cap);
      const auto ones = static_cast<std::uint64_t>(std::count(bits.begin(), bits.end(), 1));
      if (ctx.csv()) {
        t.add({cell(i + 1), cell(h), cell(to_bit_string(bits))});
      } else {
        t.add({cell(i + 1), cell(h), cell(static_cast<std::uint64_t>(bits.size())), cell(ones),
               cell(to_bit_string(bits))});
      }
    }
  }
}

void hitting_command(Context& ctx, const NamedGraph& ng) {
  const auto [lo, hi] = selected_heights(ctx.config, 1, 6);
  const auto hitting = hitting_probabilities(ng.graph, hi);
  const auto orders = root_order_recursion(ng.graph, hi);
  std::vector<std::string> columns{"type", "h", "H_down", "H_up"};
  if (!ctx.csv()) columns.push_back("equals_S_down_over_R");
  auto& t = ctx.report.table("hitting", columns);
  for (Label i : selected_types(ctx.config, ng.graph)) {
    for (int h = lo; h <= hi; ++h) {
      const auto& c = hitting.at(i, h);
      std::vector<Cell> row{cell(i + 1), cell(h), cell(c.down), cell(c.up)};
      if (!ctx.csv()) {
        const bool ok = c.down * orders.at(i, h).order == orders.at(i, h).down;
        ctx.failed = ctx.failed || !ok;
        row.push_back(cell(ok));
      }
      t.add(std::move(row));
    }
  }
}


struct Budget {
  int group_height;
  int simulate_height;
  std::uint64_t simulate_cap;
  int explosion_height;
  int random_graphs;
  int random_height;
  std::size_t small_tree_vertices;
  int hitting_height;
};

Budget budget_for(const std::string& name) {
  if (name == "small") return {6, 5, 1'000'000, 4, 20, 3, 12, 12};
  if (name == "full") return {7, 6, 10'000'000, 5, 100, 4, 14, 20};
  throw InputError("--budget must be small or full, got '" + name + "'");
}

std::optional<std::pair<int, int>> biregular_shape(const BaseGraph& g) {
  const auto& d = g.adjacency();
  if (g.size() != 2 || d[0][0] != 0 || d[1][1] != 0) return std::nullopt;
  return std::pair{d[0][1], d[1][0]};
}

void verify_group_orders(Context& ctx, const NamedGraph& ng, const Budget& b) {
  const auto& g = ng.graph;
  const auto table = forest_recursion(g, b.group_height);
  for (Label i = 0; i < g.size(); ++i) {
    for (int h = 1; h <= b.group_height; ++h) {
      const auto& order = table.at(i, h).order;
      const auto w = small_tree(g, i, h, ctx.config.cap);
      if (!w) continue;
      std::string detail = "order=" + order.get_str();
      bool ok = true;
      if (w->size() <= kDeterminantVertices) {
        const bool match = det_bigint(reduced_laplacian(*w)) == order;
        ok = ok && match;
        detail += match ? " det=ok" : " det=MISMATCH";
      }
      if (w->configuration_count() <= ctx.config.cap) {
        const bool match = count_spanning_trees_bruteforce(*w, ctx.config.cap) == order;
        ok = ok && match;
        detail += match ? " brute=ok" : " brute=MISMATCH";
      }
      if (w->size() <= b.small_tree_vertices) {
        const auto axioms = check_group_axioms(*w, ctx.config.cap);
        const bool match = order == static_cast<unsigned long>(axioms.orbit);
        ok = ok && match && axioms.closed && axioms.injective && axioms.abelian;
        ctx.report.check("group-axioms", subject(ng.name, i, h),
                         match && axioms.closed && axioms.injective && axioms.abelian,
                         fmt::format("orbit={} closed={} injective={} abelian={}", axioms.orbit, axioms.closed,
                                     axioms.injective, axioms.abelian));
      }
      ctx.report.check("group-order", subject(ng.name, i, h), ok, detail);
    }
  }
}

void verify_root_orders(Context& ctx, const NamedGraph& ng, const Budget& b) {
  const auto& g = ng.graph;
  const auto orders = root_order_recursion(g, b.simulate_height);
  for (Label i = 0; i < g.size(); ++i) {
    for (int h = 1; h <= b.simulate_height; ++h) {
      const auto& c = orders.at(i, h);
      if (c.order > b.simulate_cap) continue;
      const auto w = small_tree(g, i, h, ctx.config.cap);
      if (!w) continue;
      const auto sim = root_order_simulated(*w, b.simulate_cap);
      const bool ok = c.order == sim.order && c.down == sim.down && c.up == sim.up;
      ctx.report.check("root-order", subject(ng.name, i, h), ok,
                       fmt::format("recursion=({},{},{}) simulated=({},{},{})", c.order.get_str(), c.down.get_str(),
                                   c.up.get_str(), sim.order, sim.down, sim.up));
    }
  }
}

bool explosion_matches(const BaseGraph& g, Label i, int h, std::uint64_t cap, std::string& detail) {
  const auto formula = explosion_escape(g, i, h, cap);
  const auto w = wire(build_cover(g, i, h, cap));
  const auto [simulated, final_config] = escape_sequence(w, zero_config(w), formula.size());
  const bool ok = formula == simulated && final_config == zero_config(w);
  detail = fmt::format("period={}", formula.size());
  return ok;
}

void verify_explosion(Context& ctx, const NamedGraph& ng, const Budget& b) {
  const auto& g = ng.graph;
  const auto orders = root_order_recursion(g, b.explosion_height);
  for (Label i = 0; i < g.size(); ++i) {
    for (int h = 1; h <= b.explosion_height; ++h) {
      if (orders.at(i, h).order > b.simulate_cap || cover_size(g, i, h) > ctx.config.cap) continue;
      std::string detail;
      const bool ok = explosion_matches(g, i, h, b.simulate_cap, detail);
      ctx.report.check("explosion", subject(ng.name, i, h), ok, detail);
    }
  }
}

void verify_random_configs(Context& ctx, const NamedGraph& ng, const Budget& b, std::mt19937_64& rng) {
  const auto& g = ng.graph;
  constexpr int kConfigs = 5;
  constexpr std::size_t kPrefix = 64;
  for (Label i = 0; i < g.size(); ++i) {
    for (int h = 1;; ++h) {
      const auto w = small_tree(g, i, h, b.small_tree_vertices * 8);
      if (!w || w->size() > b.small_tree_vertices) break;
      bool ok = true;
      for (int k = 0; k < kConfigs; ++k) {
        const auto c = random_config(*w, rng);
        ok = ok && explosion_escape_prefix(*w, c, kPrefix) == escape_sequence(*w, c, kPrefix).first;
      }
      ctx.report.check("explosion-config", subject(ng.name, i, h), ok,
                       fmt::format("{} random configurations, {} particles", kConfigs, kPrefix));
    }
  }
}

void verify_sandpile(Context& ctx, const NamedGraph& ng, const Budget& b, std::mt19937_64& rng) {
  const auto& g = ng.graph;
  constexpr int kConfigs = 20;
  constexpr int kOrders = 5;
  for (Label i = 0; i < g.size(); ++i) {
    for (int h = 1;; ++h) {
      const auto w = small_tree(g, i, h, b.small_tree_vertices * 8);
      if (!w || w->size() > b.small_tree_vertices) break;
      bool ok = true;
      for (int k = 0; k < kConfigs && ok; ++k) {
        ChipConfig chips{std::vector<std::uint64_t>(w->size())};
        for (std::size_t x = 0; x < w->size(); ++x) {
          std::uniform_int_distribution<std::uint64_t> amount(0, 3 * w->degree(static_cast<Vertex>(x)));
          chips.chips[x] = amount(rng);
        }
        const auto reference = stabilize(*w, chips);
        ok = is_stable(*w, reference);
        for (int o = 0; o < kOrders && ok; ++o) {
          const auto picked = stabilize(*w, chips, [&](std::span<const Vertex> unstable) {
            return std::uniform_int_distribution<std::size_t>(0, unstable.size() - 1)(rng);
          });
          ok = picked == reference;
        }
      }
      ctx.report.check("sandpile-order", subject(ng.name, i, h), ok,
                       fmt::format("{} configurations x {} orders", kConfigs, kOrders));
    }
  }
}

void verify_hitting(Context& ctx, const NamedGraph& ng, const Budget& b) {
  const auto& g = ng.graph;
  const auto hitting = hitting_probabilities(g, b.hitting_height);
  const auto orders = root_order_recursion(g, b.hitting_height);
  for (Label i = 0; i < g.size(); ++i) {
    bool ok = true;
    for (int h = 1; h <= b.hitting_height; ++h) {
      const auto& c = orders.at(i, h);
      // S_down / R solves the alternative system: 1 = (S/R)(d_i + 1 - sum_j d_ij S_j / R_j).
      Rational inner = g.degree(i) + 1;
      if (h > 1) {
        for (Label j = 0; j < g.size(); ++j) {
          inner -= g.multiplicity(i, j) * ratio(orders.at(j, h - 1).down, orders.at(j, h - 1).order);
        }
      }
      ok = ok && hitting.at(i, h).down * c.order == c.down && Rational(ratio(c.down, c.order) * inner) == 1;
    }
    ctx.report.check("hitting", fmt::format("{} type={} h=1..{}", ng.name, i + 1, b.hitting_height), ok);
  }
}

void verify_closed_form(Context& ctx, const NamedGraph& ng) {
  const auto shape = biregular_shape(ng.graph);
  if (!shape) return;
  constexpr int kHeight = 12;
  const auto [alpha, beta] = *shape;
  const auto orders = root_order_recursion(ng.graph, kHeight);
  bool ok = true;
  for (int h = 1; h <= kHeight; ++h) {
    const auto [r1, r2] = biregular_closed_form(alpha, beta, h);
    ok = ok && r1 == orders.at(0, h).order && r2 == orders.at(1, h).order;
  }
  ctx.report.check("closed-form", fmt::format("{} h=1..{}", ng.name, kHeight), ok);
}

void verify_analysis(Context& ctx, const NamedGraph& ng) {
  const auto& g = ng.graph;
  const auto spectral = spectral_radius(g);
  std::string spectral_detail = fmt::format("rho={:.12g} residual={:.3g}", spectral.rho, spectral.residual);
  bool spectral_ok = spectral.residual < 1e-9;
  const auto fp = fixed_point(g, 1e-13);
  bool fp_ok = fp.converged && fp.residual < 1e-12;
  std::string fp_detail = fmt::format("residual={:.3g}", fp.residual);

  std::optional<double> rho_exact;
  std::optional<std::vector<double>> upsilon_exact;
  if (ng.name == "fibonacci") {
    rho_exact = (1 + std::sqrt(5.0)) / 2;
    upsilon_exact = {std::sqrt(2.0) - 1, std::sqrt(2.0) / 2};
  } else if (const auto shape = biregular_shape(g)) {
    const double a = shape->first;
    const double b = shape->second;
    rho_exact = std::sqrt(a * b);
    if (a * b > 1) upsilon_exact = {(a * b - 1) / (b + 1), (a * b - 1) / (a + 1)};
  }
  if (rho_exact) {
    spectral_ok = spectral_ok && std::abs(spectral.rho - *rho_exact) < 1e-9;
    spectral_detail += fmt::format(" expected={:.12g}", *rho_exact);
  }
  if (upsilon_exact) {
    for (std::size_t i = 0; i < upsilon_exact->size(); ++i) {
      fp_ok = fp_ok && std::abs(fp.upsilon[i] - (*upsilon_exact)[i]) < 1e-9;
    }
  }
  for (double u : fp.upsilon) fp_detail += fmt::format(" {:.12g}", u);
  ctx.report.check("spectral", ng.name, spectral_ok, spectral_detail);
  ctx.report.check("fixed-point", ng.name, fp_ok, fp_detail);

  const auto logs = log_forest_recursion(g, 30);
  bool monotone = true;
  for (int h = 1; h < 30; ++h) {
    for (Label i = 0; i < g.size(); ++i) monotone = monotone && logs.gamma[h][i] < logs.gamma[h - 1][i];
  }
  ctx.report.check("gamma-decreasing", ng.name + " h=1..30", monotone);

  if (spectral.rho > 1 + 1e-9) {
    const auto slope = asymptotic_slope(g, 10, 25);
    ctx.report.check("slope", ng.name + " h=10..25", slope.max_relative_error < 0.05,
                     fmt::format("max relative error {:.3g}", slope.max_relative_error));
    const auto exact = forest_recursion(g, 8);
    bool agree = true;
    for (int h = 1; h <= 8; ++h) {
      for (Label i = 0; i < g.size(); ++i) {
        const double e = log_bigint(exact.at(i, h).order);
        const double l = logs.log_order[h - 1][i];
        agree = agree && std::abs(e - l) <= 1e-10 * std::max(1.0, std::abs(e));
      }
    }
    ctx.report.check("log-backend", ng.name + " h=1..8", agree);
  }
}

void verify_random_graphs(Context& ctx, const Budget& b, std::mt19937_64& rng) {
  int skipped = 0;
  for (int k = 0; k < b.random_graphs; ++k) {
    const auto g = random_strongly_connected(rng, 3, 2);
    const Label i = std::uniform_int_distribution<Label>(0, g.size() - 1)(rng);
    const int h = std::uniform_int_distribution<int>(1, b.random_height)(rng);
    const auto name = fmt::format("random#{}", k + 1);
    if (root_order_recursion(g, h).at(i, h).order > b.simulate_cap || cover_size(g, i, h) > ctx.config.cap) {
      ++skipped;
      continue;
    }
    std::string detail;
    const bool ok = explosion_matches(g, i, h, b.simulate_cap, detail);
    ctx.report.check("explosion-random", subject(name, i, h), ok, detail);
  }
  ctx.report.parameters.emplace_back("random_skipped", cell(skipped));
}

void verify_command(Context& ctx) {
  const auto budget = budget_for(ctx.config.budget);
  ctx.report.parameters.emplace_back("budget", cell(ctx.config.budget));
  ctx.report.parameters.emplace_back("seed", cell(ctx.config.seed));
  std::mt19937_64 rng(ctx.config.seed);
  for (const auto& ng : resolve_graphs(ctx.config, true)) {
    verify_group_orders(ctx, ng, budget);
    verify_root_orders(ctx, ng, budget);
    verify_explosion(ctx, ng, budget);
    verify_random_configs(ctx, ng, budget, rng);
    verify_sandpile(ctx, ng, budget, rng);
    verify_hitting(ctx, ng, budget);
    verify_closed_form(ctx, ng);
    verify_analysis(ctx, ng);
  }
  verify_random_graphs(ctx, budget, rng);
  ctx.failed = ctx.failed || !ctx.report.all_passed();
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"group-order", "root-order", "gamma",  "fixed-point", "slope",
                                              "simulate",    "escape",     "hitting", "verify"};
  return names;
}

std::pair<int, int> parse_heights(const std::string& text) {
  auto parse = [&](std::string_view s) {
    int value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw InputError("malformed height range '" + text + "' (expected A..B)");
    }
    return value;
  };
  const auto dots = text.find("..");
  const std::string_view view(text);
  const std::pair<int, int> range =
      dots == std::string::npos ? std::pair{parse(view), parse(view)}
                                : std::pair{parse(view.substr(0, dots)), parse(view.substr(dots + 2))};
  if (range.first < 1 || range.second < range.first) {
    throw InputError("height range '" + text + "' must satisfy 1 <= A <= B");
  }
  return range;
}

std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                                std::ostream& err) {
  CLI::App app{"Rotor-router group orders on truncated periodic trees"};
  RunConfig config;
  std::optional<int> height;
  std::string heights;
  std::string format = "table";
  app.add_option("command", config.command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--graph", config.graph, "Graph file or preset (fibonacci, biregular:a,b)");
  app.add_option("--type", config.type, "Root type, 1-based");
  auto* h_opt = app.add_option("--height", height, "Single height");
  auto* range_opt = app.add_option("--heights", heights, "Height range A..B");
  h_opt->excludes(range_opt);
  app.add_option("--format", format, "table, csv or json");
  app.add_option("--tolerance", config.tolerance, "Fixed-point tolerance");
  app.add_option("--cap", config.cap, "Size cap for trees, enumerations and simulations");
  app.add_option("--seed", config.seed, "Seed for randomized checks");
  app.add_option("--budget", config.budget, "verify matrix extent: small or full");
  app.add_option("--trace", config.trace, "simulate: write a per-particle CSV trace");
  try {
    app.parse(argc, argv);
    config.format = parse_format(format);
    if (height) config.heights = parse_heights(std::to_string(*height));
    if (!heights.empty()) config.heights = parse_heights(heights);
    if (!(config.tolerance > 0.0)) throw InputError("--tolerance must be positive");
    if (config.cap < 1) throw InputError("--cap must be positive");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return config;
}

Report build_report(const RunConfig& config, int& exit_code) {
  Report report;
  report.command = config.command;
  Context ctx{config, report};
  if (config.command == "verify") {
    verify_command(ctx);
  } else {
    const auto graphs = resolve_graphs(config, false);
    const auto& ng = graphs.front();
    add_parameters(ctx, ng.name);
    if (config.command == "group-order") {
      group_order_command(ctx, ng);
    } else if (config.command == "root-order") {
      root_order_command(ctx, ng);
    } else if (config.command == "gamma") {
      gamma_command(ctx, ng);
    } else if (config.command == "fixed-point") {
      fixed_point_command(ctx, ng);
    } else if (config.command == "slope") {
      slope_command(ctx, ng);
    } else if (config.command == "simulate") {
      simulate_command(ctx, ng);
    } else if (config.command == "escape") {
      escape_command(ctx, ng);
    } else if (config.command == "hitting") {
      hitting_command(ctx, ng);
    } else {
      throw InputError("unknown command '" + config.command + "'");
    }
  }
  exit_code = ctx.failed ? kVerificationFailed : kOk;
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    int code = kOk;
    const auto report = build_report(config, code);
    emit_report(out, report, config.format);
    if (code == kVerificationFailed) err << "verification failed\n";
    return code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const UnsupportedRegime& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ConvergenceError& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  }
}

}  // namespace rrgroup
