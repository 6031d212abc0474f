#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "airystef/grid.hpp"
#include "airystef/similarity.hpp"

namespace airystef {

/// Temporal modulation T*:
///
///     dt* = rho(t)^-2 dt,   x* = x,   u* = rho(t)^-1 u,   rho* = rho^-1,
///
/// with the gauge t*(0) = 0.  Applying T* twice restores (t, u): the second
/// application uses rho*(s) = 1/rho(t(s)), expressed in the intermediate
/// time variable, which is the reading under which T** = I.
class Modulation {
 public:
  enum class Family { kConstant, kPower, kTabulated, kGeneric };

  /// rho(t) = value.
  static Modulation constant(double value, double t_max = 100.0);
  /// rho(t) = (t + a)^exponent.
  static Modulation power(double exponent, double a, double t_max = 100.0);
  /// rho linearly interpolated between (times[i], values[i]); derivative by
  /// central differences on the table.
  static Modulation tabulated(std::vector<double> times,
                              std::vector<double> values);
  /// Arbitrary positive rho on [0, t_max]; the t* map is precomputed by
  /// panel quadrature of rho^-2.
  static Modulation from_function(std::function<double(double)> rho,
                                  double t_max);

  [[nodiscard]] double rho(double t) const;
  [[nodiscard]] double rho_prime(double t) const;
  [[nodiscard]] double t_star_of_t(double t) const;
  [[nodiscard]] double t_of_t_star(double t_star) const;

  /// The modulation governing the image system: rho*(s) = 1/rho(t(s)).
  [[nodiscard]] Modulation inverse() const;

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] double t_max() const { return t_max_; }

 private:
  Modulation() = default;
  void build_table();

  Family family_ = Family::kConstant;
  double value_ = 1.0;             // kConstant
  double exponent_ = 0.0;          // kPower
  double a_ = 1.0;                 // kPower
  std::vector<double> tab_t_;      // kTabulated
  std::vector<double> tab_rho_;
  std::function<double(double)> fn_;  // kGeneric
  double t_max_ = 100.0;
  std::vector<double> cum_;        // cumulative t*(t) at uniform t nodes
  double cum_step_ = 0.0;
};

/// u*(x, t*) = rho(t)^-1 u(x, t) with t = t_of_t_star(t*).
double push_forward(const std::function<double(double, double)>& u,
                    const Modulation& mod, double x, double t_star);

/// Applies T* then T* again (with rho* = 1/rho(t(.))) over the grid and
/// returns the worst absolute error in recovering t and u.
double involution_check(const Modulation& mod, const GridSpec& grid);

struct ModulatedResidualOptions {
  double hx = 1e-3;
  double ht = 1e-3;
  // Drops the rho*rho'*u* term (ablation: with non-constant rho the
  // residual must then grow by an order of magnitude).
  bool drop_modulation_term = false;
};

/// Finite-difference residual of the modulated equation
///
///     u*_t* + rho^2 u*_xxx + lambda (t+a)^-2 rho^-2 u*^-4 u*_x
///           + rho rho' u* = 0
///
/// on the push-forward of an exact solution; grid.t0..t1 are t* bounds.
ResidualReport modulated_residual(const SimilaritySolution& sol,
                                  const Modulation& mod, const GridSpec& grid,
                                  const ModulatedResidualOptions& opt = {});

}  // namespace airystef
