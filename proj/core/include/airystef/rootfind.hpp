#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace airystef {

struct RootOptions {
  double f_tol = 1e-12;   // accept x when |f(x)| <= f_tol
  double x_tol = 1e-14;   // or when the bracket width shrinks below x_tol
  int max_iter = 200;
};

/// Safeguarded bracketed root-finder: secant steps clipped to the current
/// sign-change bracket, falling back to bisection whenever the secant
/// candidate leaves the bracket or fails to shrink it.
///
/// Throws std::invalid_argument (with both endpoint values in the message)
/// if [lo, hi] does not bracket a sign change, and std::runtime_error if
/// max_iter iterations do not converge.  An endpoint that already satisfies
/// |f| <= f_tol is returned as-is.
template <class F>
double find_root(F&& f, double lo, double hi, RootOptions opt = {}) {
  double flo = f(lo);
  if (std::fabs(flo) <= opt.f_tol) return lo;
  double fhi = f(hi);
  if (std::fabs(fhi) <= opt.f_tol) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument(
        "find_root: no sign change on bracket: f(" + std::to_string(lo) +
        ") = " + std::to_string(flo) + ", f(" + std::to_string(hi) + ") = " +
        std::to_string(fhi));
  }

  double a = lo, fa = flo;
  double b = hi, fb = fhi;
  double x_prev = a, f_prev = fa;
  double x = b, fx = fb;
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    double candidate;
    double denom = fx - f_prev;
    if (denom != 0.0) {
      candidate = x - fx * (x - x_prev) / denom;
    } else {
      candidate = 0.5 * (a + b);
    }
    double mid_lo = std::fmin(a, b);
    double mid_hi = std::fmax(a, b);
    if (!(candidate > mid_lo && candidate < mid_hi)) {
      candidate = 0.5 * (a + b);
    }
    double fc = f(candidate);
    if (std::fabs(fc) <= opt.f_tol) return candidate;

    x_prev = x;
    f_prev = fx;
    x = candidate;
    fx = fc;
    if ((fc > 0.0) == (fa > 0.0)) {
      a = candidate;
      fa = fc;
    } else {
      b = candidate;
      fb = fc;
    }
    if (std::fabs(b - a) <= opt.x_tol * (1.0 + std::fabs(a) + std::fabs(b))) {
      return std::fabs(fa) < std::fabs(fb) ? a : b;
    }
  }
  throw std::runtime_error("find_root: no convergence after " +
                           std::to_string(opt.max_iter) + " iterations");
}

}  // namespace airystef
