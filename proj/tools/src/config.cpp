#include "config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace airystef::cli {
namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw std::invalid_argument("unknown key \"" + item.key() + "\" in " +
                                  where);
    }
  }
}

void read_grid(const json& j, GridSpec& grid) {
  require_keys(j, {"x0", "x1", "t0", "t1", "nx", "nt"}, "grid");
  grid.x0 = j.value("x0", grid.x0);
  grid.x1 = j.value("x1", grid.x1);
  grid.t0 = j.value("t0", grid.t0);
  grid.t1 = j.value("t1", grid.t1);
  grid.nx = j.value("nx", grid.nx);
  grid.nt = j.value("nt", grid.nt);
}

void read_modulation(const json& j, ModulationSpec& spec) {
  require_keys(j, {"family", "value", "exponent", "a"}, "modulation");
  spec.family = j.value("family", spec.family);
  spec.value = j.value("value", spec.value);
  spec.exponent = j.value("exponent", spec.exponent);
  spec.a = j.value("a", spec.a);
}

void read_tolerances(const json& j, Tolerances& tol) {
  require_keys(j,
               {"analytic", "boundary", "finite_difference", "involution"},
               "tolerances");
  tol.analytic = j.value("analytic", tol.analytic);
  tol.boundary = j.value("boundary", tol.boundary);
  tol.finite_difference = j.value("finite_difference", tol.finite_difference);
  tol.involution = j.value("involution", tol.involution);
}

void read_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file " + path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config file " + path + ": " + e.what());
  }
  require_keys(j,
               {"lambda", "a", "c1", "c2", "gamma", "P_m", "grid",
                "quadrature", "output_dir", "emit", "modulation",
                "tolerances"},
               path);
  cfg.lambda = j.value("lambda", cfg.lambda);
  cfg.a = j.value("a", cfg.a);
  cfg.c1 = j.value("c1", cfg.c1);
  cfg.c2 = j.value("c2", cfg.c2);
  if (j.contains("gamma")) cfg.gamma = j["gamma"].get<double>();
  if (j.contains("P_m")) cfg.P_m = j["P_m"].get<double>();
  if (j.contains("grid")) read_grid(j["grid"], cfg.grid);
  cfg.quadrature = j.value("quadrature", cfg.quadrature);
  cfg.output_dir = j.value("output_dir", cfg.output_dir);
  if (j.contains("emit")) {
    cfg.emit.clear();
    for (const auto& item : j["emit"]) {
      cfg.emit.insert(item.get<std::string>());
    }
  }
  if (j.contains("modulation")) read_modulation(j["modulation"], cfg.modulation);
  if (j.contains("tolerances")) read_tolerances(j["tolerances"], cfg.tol);
}

std::set<std::string> parse_emit(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

void validate(const RunConfig& cfg) {
  if (!(cfg.lambda > 0.0)) {
    throw std::invalid_argument(
        "lambda = " + std::to_string(cfg.lambda) +
        " leaves the positivity regime (the construction requires lambda > "
        "0)");
  }
  if (!(cfg.a > 0.0)) {
    throw std::invalid_argument("a must be positive");
  }
  if (!(cfg.c1 > 0.0)) {
    throw std::invalid_argument("c1 must be positive");
  }
  if (cfg.gamma && cfg.P_m) {
    throw std::invalid_argument("give exactly one of gamma / P_m, not both");
  }
  cfg.grid.validate();
  if (cfg.quadrature < 16 || cfg.quadrature % 16 != 0) {
    throw std::invalid_argument("quadrature must be a positive multiple of 16");
  }
  for (const std::string& e : cfg.emit) {
    if (e != "csv" && e != "json" && e != "svg") {
      throw std::invalid_argument("emit entries must be csv, json or svg (got \"" +
                                  e + "\")");
    }
  }
  if (cfg.modulation.family != "constant" && cfg.modulation.family != "power") {
    throw std::invalid_argument("modulation family must be constant or power");
  }
  if (cfg.modulation.family == "constant" && !(cfg.modulation.value > 0.0)) {
    throw std::invalid_argument("constant modulation value must be positive");
  }
  if (cfg.modulation.family == "power" && !(cfg.modulation.a > 0.0)) {
    throw std::invalid_argument("power modulation offset a must be positive");
  }
  if (!(cfg.tol.analytic > 0.0) || !(cfg.tol.boundary > 0.0) ||
      !(cfg.tol.finite_difference > 0.0) || !(cfg.tol.involution > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
}

}  // namespace

RunConfig resolve_config(const FlagOverrides& flags) {
  RunConfig cfg;
  if (flags.config_path) read_file(*flags.config_path, cfg);

  if (flags.lambda) cfg.lambda = *flags.lambda;
  if (flags.a) cfg.a = *flags.a;
  if (flags.c1) cfg.c1 = *flags.c1;
  if (flags.c2) cfg.c2 = *flags.c2;
  if (flags.gamma && flags.pm) {
    throw std::invalid_argument("give exactly one of --gamma / --pm");
  }
  if (flags.gamma) {
    cfg.gamma = *flags.gamma;
    cfg.P_m.reset();
  }
  if (flags.pm) {
    cfg.P_m = *flags.pm;
    cfg.gamma.reset();
  }
  if (flags.out) cfg.output_dir = *flags.out;
  if (flags.tol) {
    cfg.tol.analytic = *flags.tol;
    cfg.tol.boundary = *flags.tol;
  }
  if (flags.emit) cfg.emit = parse_emit(*flags.emit);

  if (!cfg.gamma && !cfg.P_m) cfg.gamma = 1.0;
  validate(cfg);
  return cfg;
}

Modulation make_modulation(const ModulationSpec& spec) {
  if (spec.family == "constant") {
    return Modulation::constant(spec.value);
  }
  return Modulation::power(spec.exponent, spec.a);
}

}  // namespace airystef::cli
