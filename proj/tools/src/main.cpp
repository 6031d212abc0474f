#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "airystef/airy.hpp"
#include "airystef/ermakov.hpp"
#include "airystef/involutory.hpp"
#include "airystef/reciprocal.hpp"
#include "airystef/similarity.hpp"
#include "airystef/stefan.hpp"
#include "artifacts.hpp"
#include "config.hpp"
#include "jsonio.hpp"
#include "svg.hpp"

namespace {

using namespace airystef;
using namespace airystef::cli;

/// Collects tolerance breaches; exit 1 names every violated identity.
struct Gate {
  std::vector<std::string> breaches;

  void check(const std::string& name, double value, double tol) {
    if (!(value <= tol)) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "tolerance breach: %s max |residual| = %.3e exceeds %.3e",
                    name.c_str(), value, tol);
      breaches.emplace_back(buf);
    }
  }

  void check(const ResidualReport& r, double tol) {
    check(r.identity_name + " (" + r.method + ")", r.max_abs, tol);
  }

  [[nodiscard]] bool pass() const { return breaches.empty(); }

  int finish() const {
    for (const std::string& b : breaches) std::cerr << b << "\n";
    return pass() ? 0 : 1;
  }
};

struct Instance {
  RunConfig cfg;
  SimilaritySolution sol;
  StefanProblem problem;
};

double recover_gamma(const SimilaritySolution& sol, double pm) {
  auto g = [&sol, pm](double gamma) {
    return gamma * psi(sol.params, gamma).psi - pm;
  };
  // Log-spaced scan for a sign-change bracket; gamma*Psi(gamma) need not be
  // monotone, so walk segment by segment.
  const double hi_end = 32.0;
  const int segments = 96;
  double lo = kMinGamma, flo = g(lo);
  for (int k = 1; k <= segments; ++k) {
    double hi = kMinGamma *
                std::pow(hi_end / kMinGamma, static_cast<double>(k) / segments);
    double fhi = g(hi);
    if (flo == 0.0) return lo;
    if (flo * fhi <= 0.0) return inverse_solve(sol, pm, {lo, hi});
    lo = hi;
    flo = fhi;
  }
  throw std::invalid_argument("P_m = " + std::to_string(pm) +
                              " is not attained by any gamma in [" +
                              std::to_string(kMinGamma) + ", 32]");
}

Instance build_instance(const RunConfig& cfg) {
  SimilaritySolution sol =
      make_solution(make_params(cfg.lambda, cfg.c1, cfg.c2), cfg.a);
  double gamma = cfg.gamma ? *cfg.gamma : recover_gamma(sol, *cfg.P_m);
  return {cfg, sol, forward_solve(sol, gamma)};
}

double point_residual(const SimilaritySolution& sol, double x, double t) {
  UDerivs d = eval_derivs(sol, x, t);
  double tau = t + sol.a;
  return d.u_t + d.u_xxx +
         sol.params.lambda / (tau * tau) * d.u_x / (d.u * d.u * d.u * d.u);
}

std::string label_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return cfg.output_dir + "/" + name;
}

void note_written(const std::string& path) {
  std::cout << "wrote " << path << "\n";
}

/// Evenly spaced subset of 0..n-1 with at most k entries.
std::vector<int> pick_slices(int n, int k) {
  std::vector<int> out;
  int m = std::min(n, k);
  for (int i = 0; i < m; ++i) {
    out.push_back(m == 1 ? 0 : static_cast<int>(std::lround(
                                    static_cast<double>(i) * (n - 1) /
                                    (m - 1))));
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int cmd_airy(const std::vector<double>& zs) {
  std::string out = "z,ai,aip,bi,bip,wronskian_defect\n";
  for (double z : zs) {
    AiryValues v = airy(z);
    double defect = v.ai * v.bip - v.aip * v.bi - std::numbers::inv_pi;
    out += csv_number(z) + "," + csv_number(v.ai) + "," + csv_number(v.aip) +
           "," + csv_number(v.bi) + "," + csv_number(v.bip) + "," +
           csv_number(defect) + "\n";
  }
  std::fputs(out.c_str(), stdout);
  return 0;
}

int cmd_solve(const FlagOverrides& flags) {
  RunConfig cfg = resolve_config(flags);
  Instance inst = build_instance(cfg);
  const GridSpec& grid = cfg.grid;

  PdeResiduals pde = pde_residual(inst.sol, grid, {});
  std::vector<double> times(20);
  for (int i = 0; i < 20; ++i) {
    times[i] = grid.t0 + (grid.t1 - grid.t0) * i / 19.0;
  }
  std::vector<ResidualReport> boundary = boundary_residuals(inst.problem, times);

  std::vector<double> residuals(static_cast<size_t>(grid.nx) * grid.nt);
  for (int j = 0; j < grid.nt; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      residuals[static_cast<size_t>(j) * grid.nx + i] =
          point_residual(inst.sol, grid.x(i), grid.t(j));
    }
  }

  ensure_dir(cfg.output_dir);
  if (cfg.emit.count("csv")) {
    std::string csv = "x,t,u,residual\n";
    for (int j = 0; j < grid.nt; ++j) {
      for (int i = 0; i < grid.nx; ++i) {
        double x = grid.x(i), t = grid.t(j);
        csv += csv_number(x) + "," + csv_number(t) + "," +
               csv_number(eval_u(inst.sol, x, t)) + "," +
               csv_number(residuals[static_cast<size_t>(j) * grid.nx + i]) +
               "\n";
      }
    }
    write_file(out_path(cfg, "solution.csv"), csv);
    note_written(out_path(cfg, "solution.csv"));
  }
  if (cfg.emit.count("json")) {
    write_file(out_path(cfg, "problem.json"),
               problem_json(inst.problem).dump() + "\n");
    note_written(out_path(cfg, "problem.json"));
  }

  Gate gate;
  gate.check(pde.analytic, cfg.tol.analytic);
  gate.check(pde.finite_difference, cfg.tol.finite_difference);
  for (const ResidualReport& r : boundary) gate.check(r, cfg.tol.boundary);

  if (cfg.emit.count("json")) {
    Json doc = Json::object({
        {"reports",
         Json::array({report_json(pde.analytic),
                      report_json(pde.finite_difference),
                      report_json(boundary[0]), report_json(boundary[1]),
                      report_json(boundary[2])})},
        {"tolerances", tolerances_json(cfg.tol)},
        {"pass", Json::boolean(gate.pass())},
    });
    write_file(out_path(cfg, "residuals.json"), doc.dump() + "\n");
    note_written(out_path(cfg, "residuals.json"));
  }
  if (cfg.emit.count("svg")) {
    std::vector<Series> series;
    for (int j : pick_slices(grid.nt, 6)) {
      Series s;
      s.label = "t = " + label_num(grid.t(j));
      for (int i = 0; i < grid.nx; ++i) {
        s.x.push_back(grid.x(i));
        s.y.push_back(eval_u(inst.sol, grid.x(i), grid.t(j)));
      }
      series.push_back(std::move(s));
    }
    write_file(out_path(cfg, "solution.svg"),
               render_lines(series, {"similarity solution", "x", "u"}));
    note_written(out_path(cfg, "solution.svg"));

    std::vector<double> xs(grid.nx), ts(grid.nt);
    for (int i = 0; i < grid.nx; ++i) xs[i] = grid.x(i);
    for (int j = 0; j < grid.nt; ++j) ts[j] = grid.t(j);
    write_file(out_path(cfg, "residual.svg"),
               render_heatmap(xs, ts, residuals,
                              {"pointwise equation residual", "x", "t"}));
    note_written(out_path(cfg, "residual.svg"));
  }

  return gate.finish();
}

int cmd_inverse(const FlagOverrides& flags) {
  RunConfig cfg = resolve_config(flags);
  if (!cfg.P_m) {
    throw std::invalid_argument("inverse needs --pm (or P_m in the config)");
  }
  Instance inst = build_instance(cfg);
  std::printf("%.17g\n", inst.problem.gamma);
  if (cfg.emit.count("json")) {
    ensure_dir(cfg.output_dir);
    write_file(out_path(cfg, "problem.json"),
               problem_json(inst.problem).dump() + "\n");
  }
  return 0;
}

int cmd_reciprocal(const FlagOverrides& flags) {
  RunConfig cfg = resolve_config(flags);
  Instance inst = build_instance(cfg);
  const StefanProblem& problem = inst.problem;
  const GridSpec& grid = cfg.grid;
  int quad = cfg.quadrature;

  ReciprocalImage image = build_image(problem, grid, quad);

  double x_probe_max = std::min(front(problem, grid.t0), grid.x1);
  double gap = 0.0;
  for (double f : {0.3, 0.6, 0.9}) {
    auto [route_xt, route_tx] =
        x_star_two_routes(problem, f * x_probe_max, grid.t0, grid.t1, quad);
    gap = std::max(gap, std::fabs(route_xt - route_tx));
  }
  double drift = std::fabs(x_star_time_leg(problem, 0.0, grid.t0, grid.t1, quad));

  // Image-equation compatibility on a fixed 40x40 lattice with steps
  // ~1e-2, centered in the image strip.  Decoupled from the config grid:
  // the residual is truncation-limited, so the lattice must be fine
  // enough on its own.
  double width = x_star(problem, front(problem, grid.t0), grid.t0, quad);
  GridSpec lattice;
  double span = std::min(0.39, 0.8 * width);
  lattice.x0 = 0.5 * (width - span);
  lattice.x1 = 0.5 * (width + span);
  lattice.t0 = grid.t0;
  lattice.t1 = grid.t0 + std::min(0.39, grid.t1 - grid.t0);
  lattice.nx = 40;
  lattice.nt = 40;
  ResidualReport compat = compatibility_residual(problem, lattice, quad);

  Gate gate;
  gate.check(compat, cfg.tol.finite_difference);
  gate.check("path-independence (analytic)", gap, cfg.tol.analytic);
  gate.check("left-boundary-drift (analytic)", drift, cfg.tol.analytic);

  ensure_dir(cfg.output_dir);
  if (cfg.emit.count("csv")) {
    std::string csv = "x,t,x_star,u_star\n";
    for (const ReciprocalSample& s : image.samples) {
      csv += csv_number(s.x) + "," + csv_number(s.t) + "," +
             csv_number(s.x_star) + "," + csv_number(s.u_star) + "\n";
    }
    write_file(out_path(cfg, "reciprocal.csv"), csv);
    note_written(out_path(cfg, "reciprocal.csv"));

    std::string fronts = "t,s,s_star\n";
    for (int j = 0; j < grid.nt; ++j) {
      double t = grid.t(j);
      fronts += csv_number(t) + "," + csv_number(front(problem, t)) + "," +
                csv_number(s_star(problem, t, quad)) + "\n";
    }
    write_file(out_path(cfg, "front.csv"), fronts);
    note_written(out_path(cfg, "front.csv"));
  }
  if (cfg.emit.count("json")) {
    double initial =
        image.s_star_coeff * std::log(inst.sol.a) + image.s_star_const;
    Json doc = Json::object({
        {"x_star_origin", Json::number(image.x_star_origin)},
        {"s_star_coeff", Json::number(image.s_star_coeff)},
        {"s_star_const", Json::number(image.s_star_const)},
        {"s_star_initial", Json::number(initial)},
        {"path_independence_gap", Json::number(gap)},
        {"left_boundary_drift", Json::number(drift)},
        {"compatibility", report_json(compat)},
        {"tolerances", tolerances_json(cfg.tol)},
        {"pass", Json::boolean(gate.pass())},
    });
    write_file(out_path(cfg, "reciprocal.json"), doc.dump() + "\n");
    note_written(out_path(cfg, "reciprocal.json"));
  }
  if (cfg.emit.count("svg")) {
    std::vector<Series> series;
    for (int j : pick_slices(grid.nt, 6)) {
      Series s;
      s.label = "t = " + label_num(grid.t(j));
      for (int i = 0; i < grid.nx; ++i) {
        const ReciprocalSample& sample =
            image.samples[static_cast<size_t>(j) * grid.nx + i];
        s.x.push_back(sample.x_star);
        s.y.push_back(sample.u_star);
      }
      series.push_back(std::move(s));
    }
    write_file(out_path(cfg, "reciprocal.svg"),
               render_lines(series, {"reciprocal image", "x*", "u*"}));
    note_written(out_path(cfg, "reciprocal.svg"));

    Series s_curve{"S(t)", {}, {}}, s_star_curve_pts{"S*(t*)", {}, {}};
    for (int j = 0; j < grid.nt; ++j) {
      double t = grid.t(j);
      s_curve.x.push_back(t);
      s_curve.y.push_back(front(problem, t));
      s_star_curve_pts.x.push_back(t);
      s_star_curve_pts.y.push_back(s_star(problem, t, quad));
    }
    write_file(out_path(cfg, "front.svg"),
               render_lines({s_curve, s_star_curve_pts},
                            {"moving boundaries", "t", "S"}));
    note_written(out_path(cfg, "front.svg"));
  }

  return gate.finish();
}

int cmd_modulate(const FlagOverrides& flags) {
  RunConfig cfg = resolve_config(flags);
  Instance inst = build_instance(cfg);
  Modulation mod = make_modulation(cfg.modulation);
  const GridSpec& grid = cfg.grid;  // t0..t1 are t* bounds here

  ResidualReport rep = modulated_residual(inst.sol, mod, grid, {});
  GridSpec original = grid;
  original.t0 = mod.t_of_t_star(grid.t0);
  original.t1 = mod.t_of_t_star(grid.t1);
  double round_trip = involution_check(mod, original);

  Gate gate;
  gate.check(rep, cfg.tol.finite_difference);
  gate.check("involution round-trip", round_trip, cfg.tol.involution);

  auto u_field = [&inst](double x, double t) { return eval_u(inst.sol, x, t); };

  ensure_dir(cfg.output_dir);
  if (cfg.emit.count("csv")) {
    std::string csv = "x,t_star,u_star\n";
    for (int j = 0; j < grid.nt; ++j) {
      double ts = grid.t(j);
      for (int i = 0; i < grid.nx; ++i) {
        csv += csv_number(grid.x(i)) + "," + csv_number(ts) + "," +
               csv_number(push_forward(u_field, mod, grid.x(i), ts)) + "\n";
      }
    }
    write_file(out_path(cfg, "modulated.csv"), csv);
    note_written(out_path(cfg, "modulated.csv"));
  }
  if (cfg.emit.count("json")) {
    std::vector<std::pair<std::string, Json>> mod_fields = {
        {"family", Json::string(cfg.modulation.family)}};
    if (cfg.modulation.family == "constant") {
      mod_fields.emplace_back("value", Json::number(cfg.modulation.value));
    } else {
      mod_fields.emplace_back("exponent", Json::number(cfg.modulation.exponent));
      mod_fields.emplace_back("a", Json::number(cfg.modulation.a));
    }
    Json doc = Json::object({
        {"modulation", Json::object(std::move(mod_fields))},
        {"round_trip_error", Json::number(round_trip)},
        {"modulated", report_json(rep)},
        {"tolerances", tolerances_json(cfg.tol)},
        {"pass", Json::boolean(gate.pass())},
    });
    write_file(out_path(cfg, "involution.json"), doc.dump() + "\n");
    note_written(out_path(cfg, "involution.json"));
  }
  if (cfg.emit.count("svg")) {
    std::vector<Series> series;
    for (int j : pick_slices(grid.nt, 6)) {
      Series s;
      s.label = "t* = " + label_num(grid.t(j));
      for (int i = 0; i < grid.nx; ++i) {
        s.x.push_back(grid.x(i));
        s.y.push_back(push_forward(u_field, mod, grid.x(i), grid.t(j)));
      }
      series.push_back(std::move(s));
    }
    write_file(out_path(cfg, "modulated.svg"),
               render_lines(series, {"modulated image", "x", "u*"}));
    note_written(out_path(cfg, "modulated.svg"));
  }

  return gate.finish();
}

int cmd_plot(const std::string& input, const std::string& kind,
             std::string out_file) {
  CsvTable table = read_csv(input);
  if (out_file.empty()) {
    out_file = input;
    if (out_file.size() > 4 && out_file.substr(out_file.size() - 4) == ".csv") {
      out_file.resize(out_file.size() - 4);
    }
    out_file += ".svg";
  }
  std::string title = std::filesystem::path(input).filename().string();

  std::string svg;
  if (kind == "line") {
    if (table.header.size() < 3) {
      throw std::invalid_argument(
          "line plots need at least 3 columns (x, group, y)");
    }
    std::map<double, Series> groups;
    for (const std::vector<double>& row : table.rows) {
      Series& s = groups[row[1]];
      s.x.push_back(row[0]);
      s.y.push_back(row[2]);
    }
    std::vector<double> keys;
    for (const auto& [key, unused] : groups) keys.push_back(key);
    std::vector<Series> series;
    for (int k : pick_slices(static_cast<int>(keys.size()), 6)) {
      Series s = groups[keys[k]];
      s.label = table.header[1] + " = " + label_num(keys[k]);
      series.push_back(std::move(s));
    }
    svg = render_lines(series, {title, table.header[0], table.header[2]});
  } else if (kind == "heatmap") {
    if (table.header.size() < 3) {
      throw std::invalid_argument(
          "heatmaps need at least 3 columns (x, t, value)");
    }
    std::set<double> xset, tset;
    for (const std::vector<double>& row : table.rows) {
      xset.insert(row[0]);
      tset.insert(row[1]);
    }
    std::vector<double> xs(xset.begin(), xset.end()),
        ts(tset.begin(), tset.end());
    std::map<double, size_t> xi, ti;
    for (size_t i = 0; i < xs.size(); ++i) xi[xs[i]] = i;
    for (size_t j = 0; j < ts.size(); ++j) ti[ts[j]] = j;
    std::vector<double> values(xs.size() * ts.size(), 0.0);
    size_t vcol = table.header.size() - 1;
    for (const std::vector<double>& row : table.rows) {
      values[ti[row[1]] * xs.size() + xi[row[0]]] = row[vcol];
    }
    svg = render_heatmap(
        xs, ts, values,
        {title + " (" + table.header[vcol] + ")", table.header[0],
         table.header[1]});
  } else {  // front: every column against the first
    if (table.header.size() < 2) {
      throw std::invalid_argument("front plots need at least 2 columns");
    }
    std::vector<Series> series(table.header.size() - 1);
    for (size_t c = 1; c < table.header.size(); ++c) {
      series[c - 1].label = table.header[c];
      for (const std::vector<double>& row : table.rows) {
        series[c - 1].x.push_back(row[0]);
        series[c - 1].y.push_back(row[c]);
      }
    }
    svg = render_lines(series, {title, table.header[0], "position"});
  }
  write_file(out_file, svg);
  note_written(out_file);
  return 0;
}

void add_common_flags(CLI::App* cmd, FlagOverrides& f) {
  cmd->add_option("--config", f.config_path, "JSON config file");
  cmd->add_option("--lambda", f.lambda, "equation coefficient (must be > 0)");
  cmd->add_option("--a", f.a, "time offset in t + a (must be > 0)");
  cmd->add_option("--gamma", f.gamma, "front coefficient of S(t)");
  cmd->add_option("--pm", f.pm, "front value constant P_m (inverse solve)");
  cmd->add_option("--c1", f.c1, "superposition constant c1");
  cmd->add_option("--c2", f.c2, "superposition constant c2");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--tol", f.tol,
                  "override the analytic and boundary tolerances");
  cmd->add_option("--emit", f.emit, "comma-separated subset of csv,json,svg");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Airy-type similarity solutions of "
      "u_t + u_xxx + lambda (t+a)^-2 u^-4 u_x = 0, their Stefan-type moving "
      "boundary problems, and the reciprocal / involutory transforms"};
  app.require_subcommand(1);

  auto* airy_cmd = app.add_subcommand(
      "airy", "Print Ai, Ai', Bi, Bi' and the Wronskian defect per z as CSV");
  std::vector<double> zs;
  airy_cmd->add_option("z", zs, "evaluation points")->required();

  FlagOverrides solve_flags, inverse_flags, reciprocal_flags, modulate_flags;
  auto* solve_cmd = app.add_subcommand(
      "solve", "Solve an instance; write solution.csv, problem.json, "
               "residuals.json");
  add_common_flags(solve_cmd, solve_flags);
  auto* inverse_cmd = app.add_subcommand(
      "inverse", "Recover gamma from P_m and print it");
  add_common_flags(inverse_cmd, inverse_flags);
  auto* reciprocal_cmd = app.add_subcommand(
      "reciprocal", "Map the instance through the reciprocal transformation; "
                    "write reciprocal.csv, front.csv, reciprocal.json");
  add_common_flags(reciprocal_cmd, reciprocal_flags);
  auto* modulate_cmd = app.add_subcommand(
      "modulate", "Push the solution through a temporal modulation; write "
                  "modulated.csv, involution.json");
  add_common_flags(modulate_cmd, modulate_flags);

  auto* plot_cmd =
      app.add_subcommand("plot", "Render a CSV artifact as a standalone SVG");
  std::string plot_input, plot_kind = "line", plot_out;
  plot_cmd->add_option("input", plot_input, "CSV file to plot")->required();
  plot_cmd->add_option("--kind", plot_kind, "line, heatmap or front")
      ->check(CLI::IsMember({"line", "heatmap", "front"}));
  plot_cmd->add_option("--out", plot_out, "output SVG path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*airy_cmd) return cmd_airy(zs);
    if (*solve_cmd) return cmd_solve(solve_flags);
    if (*inverse_cmd) return cmd_inverse(inverse_flags);
    if (*reciprocal_cmd) return cmd_reciprocal(reciprocal_flags);
    if (*modulate_cmd) return cmd_modulate(modulate_flags);
    if (*plot_cmd) return cmd_plot(plot_input, plot_kind, plot_out);
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
