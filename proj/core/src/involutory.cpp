#include "airystef/involutory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "airystef/quadrature.hpp"
#include "airystef/rootfind.hpp"

namespace airystef {
namespace {

constexpr int kTableCells = 4096;

void require_positive_rho(double r, double t) {
  if (!(r > 0.0)) {
    throw std::domain_error("Modulation: rho(t) must be positive (t = " +
                            std::to_string(t) + ")");
  }
}

}  // namespace

Modulation Modulation::constant(double value, double t_max) {
  require_positive_rho(value, 0.0);
  Modulation m;
  m.family_ = Family::kConstant;
  m.value_ = value;
  m.t_max_ = t_max;
  return m;
}

Modulation Modulation::power(double exponent, double a, double t_max) {
  if (!(a > 0.0)) {
    throw std::domain_error("Modulation::power: a must be positive");
  }
  Modulation m;
  m.family_ = Family::kPower;
  m.exponent_ = exponent;
  m.a_ = a;
  m.t_max_ = t_max;
  return m;
}

Modulation Modulation::tabulated(std::vector<double> times,
                                 std::vector<double> values) {
  if (times.size() < 2 || times.size() != values.size()) {
    throw std::invalid_argument(
        "Modulation::tabulated: need matching tables with >= 2 entries");
  }
  for (size_t i = 0; i + 1 < times.size(); ++i) {
    if (!(times[i] < times[i + 1])) {
      throw std::invalid_argument(
          "Modulation::tabulated: times must be strictly increasing");
    }
  }
  if (times.front() > 0.0) {
    throw std::invalid_argument(
        "Modulation::tabulated: table must cover t = 0");
  }
  for (size_t i = 0; i < values.size(); ++i) {
    require_positive_rho(values[i], times[i]);
  }
  Modulation m;
  m.family_ = Family::kTabulated;
  m.tab_t_ = std::move(times);
  m.tab_rho_ = std::move(values);
  m.t_max_ = m.tab_t_.back();
  m.build_table();
  return m;
}

Modulation Modulation::from_function(std::function<double(double)> rho,
                                     double t_max) {
  if (!(t_max > 0.0)) {
    throw std::invalid_argument("Modulation::from_function: t_max <= 0");
  }
  Modulation m;
  m.family_ = Family::kGeneric;
  m.fn_ = std::move(rho);
  m.t_max_ = t_max;
  m.build_table();
  return m;
}

void Modulation::build_table() {
  cum_.assign(kTableCells + 1, 0.0);
  cum_step_ = t_max_ / kTableCells;
  double sum = 0.0, comp = 0.0;  // compensated running total
  for (int i = 0; i < kTableCells; ++i) {
    double lo = i * cum_step_;
    double integral = integrate_gl16(
        [this](double t) {
          double r = rho(t);
          return 1.0 / (r * r);
        },
        lo, lo + cum_step_, 1);
    double y = integral - comp;
    double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
    cum_[i + 1] = sum;
  }
}

double Modulation::rho(double t) const {
  switch (family_) {
    case Family::kConstant:
      return value_;
    case Family::kPower: {
      double base = t + a_;
      if (!(base > 0.0)) {
        throw std::domain_error("Modulation: t + a must be positive");
      }
      return std::pow(base, exponent_);
    }
    case Family::kTabulated: {
      if (t < tab_t_.front() - 1e-12 || t > tab_t_.back() + 1e-12) {
        throw std::domain_error("Modulation: t outside tabulated range");
      }
      auto it = std::upper_bound(tab_t_.begin(), tab_t_.end(), t);
      size_t hi = std::min<size_t>(
          std::max<ptrdiff_t>(it - tab_t_.begin(), 1), tab_t_.size() - 1);
      size_t lo = hi - 1;
      double w = (t - tab_t_[lo]) / (tab_t_[hi] - tab_t_[lo]);
      return tab_rho_[lo] + w * (tab_rho_[hi] - tab_rho_[lo]);
    }
    case Family::kGeneric: {
      double r = fn_(t);
      require_positive_rho(r, t);
      return r;
    }
  }
  throw std::logic_error("Modulation: unknown family");
}

double Modulation::rho_prime(double t) const {
  switch (family_) {
    case Family::kConstant:
      return 0.0;
    case Family::kPower:
      return exponent_ * std::pow(t + a_, exponent_ - 1.0);
    case Family::kTabulated: {
      // Central differences at the table nodes, interpolated linearly.
      auto node_slope = [this](size_t i) {
        size_t lo = i == 0 ? 0 : i - 1;
        size_t hi = i + 1 >= tab_t_.size() ? tab_t_.size() - 1 : i + 1;
        return (tab_rho_[hi] - tab_rho_[lo]) / (tab_t_[hi] - tab_t_[lo]);
      };
      auto it = std::upper_bound(tab_t_.begin(), tab_t_.end(), t);
      size_t hi = std::min<size_t>(
          std::max<ptrdiff_t>(it - tab_t_.begin(), 1), tab_t_.size() - 1);
      size_t lo = hi - 1;
      double w = (t - tab_t_[lo]) / (tab_t_[hi] - tab_t_[lo]);
      return node_slope(lo) + w * (node_slope(hi) - node_slope(lo));
    }
    case Family::kGeneric: {
      double h = 1e-6 * std::fmax(1.0, std::fabs(t));
      return (rho(t + h) - rho(t - h)) / (2.0 * h);
    }
  }
  throw std::logic_error("Modulation: unknown family");
}

double Modulation::t_star_of_t(double t) const {
  switch (family_) {
    case Family::kConstant:
      return t / (value_ * value_);
    case Family::kPower: {
      double q = 1.0 - 2.0 * exponent_;
      if (exponent_ == 0.5) return std::log((t + a_) / a_);
      return (std::pow(t + a_, q) - std::pow(a_, q)) / q;
    }
    case Family::kTabulated:
    case Family::kGeneric: {
      if (t < 0.0 || t > t_max_ + 1e-9) {
        throw std::domain_error("Modulation: t outside [0, t_max]");
      }
      int cell = std::min(static_cast<int>(t / cum_step_), kTableCells - 1);
      double lo = cell * cum_step_;
      return cum_[cell] + integrate_gl16(
                              [this](double s) {
                                double r = rho(s);
                                return 1.0 / (r * r);
                              },
                              lo, t, 1);
    }
  }
  throw std::logic_error("Modulation: unknown family");
}

double Modulation::t_of_t_star(double t_star) const {
  switch (family_) {
    case Family::kConstant:
      return t_star * value_ * value_;
    case Family::kPower: {
      if (exponent_ == 0.5) return a_ * std::exp(t_star) - a_;
      double q = 1.0 - 2.0 * exponent_;
      double arg = std::pow(a_, q) + q * t_star;
      if (!(arg > 0.0)) {
        throw std::domain_error("Modulation: t_star outside the map's range");
      }
      return std::pow(arg, 1.0 / q) - a_;
    }
    case Family::kTabulated:
    case Family::kGeneric: {
      if (t_star < -1e-12 || t_star > cum_.back() + 1e-9) {
        throw std::domain_error("Modulation: t_star outside [0, t*(t_max)]");
      }
      auto it = std::upper_bound(cum_.begin(), cum_.end(), t_star);
      int hi = std::clamp<int>(static_cast<int>(it - cum_.begin()), 1,
                               kTableCells);
      double t_lo = (hi - 1) * cum_step_;
      double t_hi = hi * cum_step_;
      return find_root(
          [this, t_star](double t) { return t_star_of_t(t) - t_star; }, t_lo,
          t_hi, RootOptions{1e-15, 1e-15, 200});
    }
  }
  throw std::logic_error("Modulation: unknown family");
}

Modulation Modulation::inverse() const {
  auto parent = std::make_shared<Modulation>(*this);
  return from_function(
      [parent](double s) {
        return 1.0 / parent->rho(parent->t_of_t_star(s));
      },
      t_star_of_t(t_max_));
}

double push_forward(const std::function<double(double, double)>& u,
                    const Modulation& mod, double x, double t_star) {
  double t = mod.t_of_t_star(t_star);
  return u(x, t) / mod.rho(t);
}

double involution_check(const Modulation& mod, const GridSpec& grid) {
  grid.validate();
  if (grid.t1 > mod.t_max()) {
    throw std::domain_error(
        "involution_check: grid exceeds the modulation's working interval");
  }
  Modulation inv = mod.inverse();
  double max_err = 0.0;
  for (int j = 0; j < grid.nt; ++j) {
    double t = grid.t(j);
    double t_star = mod.t_star_of_t(t);
    double t_back = inv.t_star_of_t(t_star);
    max_err = std::fmax(max_err, std::fabs(t_back - t));
    for (int i = 0; i < grid.nx; ++i) {
      // Any positive sample field works; recovery only probes the maps.
      double u = 1.5 + 0.5 * std::sin(grid.x(i) + 0.25 * t);
      double u_star = u / mod.rho(t);
      double u_back = u_star / inv.rho(t_star);
      max_err = std::fmax(max_err, std::fabs(u_back - u));
    }
  }
  return max_err;
}

ResidualReport modulated_residual(const SimilaritySolution& sol,
                                  const Modulation& mod, const GridSpec& grid,
                                  const ModulatedResidualOptions& opt) {
  if (grid.empty()) {
    return {"modulated-pde", 0, 0.0, 0.0, "finite-difference", "empty"};
  }
  grid.validate();
  double lambda = sol.params.lambda;

  // u*(x, t*) with the time argument mapped back through the modulation;
  // eval_derivs only needs t + a > 0, so the time stencil may dip slightly
  // below the physical window.
  auto u_star_at = [&](double x, double t_star) {
    double t = mod.t_of_t_star(t_star);
    return eval_derivs(sol, x, t).u / mod.rho(t);
  };

  double max_abs = 0.0, sum_abs = 0.0;
  int n = 0;
  for (int j = 0; j < grid.nt; ++j) {
    double ts = grid.t(j);
    double t = mod.t_of_t_star(ts);
    double rho = mod.rho(t);
    double rho_prime = mod.rho_prime(t);
    double tau = t + sol.a;
    for (int i = 0; i < grid.nx; ++i) {
      double x = grid.x(i);
      double hx = opt.hx, ht = opt.ht;
      double u0 = u_star_at(x, ts);
      double ut = (u_star_at(x, ts + ht) - u_star_at(x, ts - ht)) / (2.0 * ht);
      double up1 = u_star_at(x + hx, ts), um1 = u_star_at(x - hx, ts);
      double up2 = u_star_at(x + 2.0 * hx, ts),
             um2 = u_star_at(x - 2.0 * hx, ts);
      double ux = (up1 - um1) / (2.0 * hx);
      double uxxx = (up2 - 2.0 * up1 + 2.0 * um1 - um2) /
                    (2.0 * hx * hx * hx);
      double r = ut + rho * rho * uxxx +
                 lambda / (tau * tau * rho * rho) * ux /
                     (u0 * u0 * u0 * u0);
      if (!opt.drop_modulation_term) r += rho * rho_prime * u0;
      double abs_r = std::fabs(r);
      if (abs_r > max_abs) max_abs = abs_r;
      sum_abs += abs_r;
      ++n;
    }
  }

  char notes[160];
  std::snprintf(notes, sizeof(notes), "hx=%.3e ht*=%.3e%s", opt.hx, opt.ht,
                opt.drop_modulation_term ? " (rho*rho'*u* term dropped)" : "");
  return {"modulated-pde", n, max_abs, n > 0 ? sum_abs / n : 0.0,
          "finite-difference", notes};
}

}  // namespace airystef
