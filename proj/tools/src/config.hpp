#pragma once

#include <optional>
#include <set>
#include <string>

#include "airystef/grid.hpp"
#include "airystef/involutory.hpp"

namespace airystef::cli {

struct ModulationSpec {
  std::string family = "power";  // "constant" or "power"
  double value = 1.0;            // constant family
  double exponent = 0.25;        // power family
  double a = 1.0;                // power family offset
};

struct Tolerances {
  double analytic = 1e-9;
  double boundary = 1e-9;
  double finite_difference = 1e-4;
  double involution = 1e-10;
};

/// One resolved run: defaults, then the config file, then flag overrides.
struct RunConfig {
  double lambda = 1.0;
  double a = 1.0;
  double c1 = 1.0;
  double c2 = 0.0;
  std::optional<double> gamma;
  std::optional<double> P_m;
  GridSpec grid{0.0, 1.1, 0.5, 10.0, 50, 50};
  int quadrature = 64;
  std::string output_dir = "out";
  std::set<std::string> emit = {"csv", "json"};
  ModulationSpec modulation;
  Tolerances tol;
};

/// Flag values captured by the parser; unset means "keep the config value".
struct FlagOverrides {
  std::optional<std::string> config_path;
  std::optional<double> lambda;
  std::optional<double> a;
  std::optional<double> gamma;
  std::optional<double> pm;
  std::optional<double> c1;
  std::optional<double> c2;
  std::optional<std::string> out;
  std::optional<double> tol;
  std::optional<std::string> emit;
};

/// Merges file + flags and validates; throws std::invalid_argument with a
/// "config error"-worthy message on any defect.
RunConfig resolve_config(const FlagOverrides& flags);

/// gamma if given, else recovered from P_m; resolve_config guarantees
/// exactly one is set.
Modulation make_modulation(const ModulationSpec& spec);

}  // namespace airystef::cli
