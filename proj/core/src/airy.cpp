#include "airystef/airy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace airystef {
namespace {

// ---------------------------------------------------------------------------
// Double-double arithmetic.
//
// The Maclaurin route combines two growing series with opposite signs; at
// z = 8 the combination for Ai cancels ~13 decimal digits, which plain
// double accumulation (Kahan included) cannot survive.  Carrying the sums
// as unevaluated hi+lo pairs keeps ~32 digits through the cancellation.
// ---------------------------------------------------------------------------

struct DD {
  double hi;
  double lo;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_sub(DD a, DD b) { return dd_add(a, {-b.hi, -b.lo}); }

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul_d(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div_d(DD a, double b) {
  double q1 = a.hi / b;
  DD p = two_prod(q1, b);
  double r = ((a.hi - p.hi) - p.lo) + a.lo;
  double q2 = r / b;
  return quick_two_sum(q1, q2);
}

inline DD dd_from(double x) { return {x, 0.0}; }

// Series constants, split to double-double precision:
//   kAi0  = Ai(0)  = 3^(-2/3) / Gamma(2/3)
//   kMAip0 = -Ai'(0) = 3^(-1/3) / Gamma(1/3)
constexpr DD kAi0 = {0.3550280538878172, 2.05233632436212e-17};
constexpr DD kMAip0 = {0.2588194037928068, -2.522243111610832e-17};
constexpr DD kSqrt3 = {1.7320508075688772, 1.0035084221806903e-16};

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kPi = 3.14159265358979323846;

constexpr double kLnOverflow = 709.0;  // ln(DBL_MAX) minus margin
constexpr int kMaxSeriesTerms = 400;

// ---------------------------------------------------------------------------
// Maclaurin branch: Ai = c1 f - c2 g, Bi = sqrt(3) (c1 f + c2 g), where
//   f(z) = sum 3^k (1/3)_k z^(3k) / (3k)!
//   g(z) = sum 3^k (2/3)_k z^(3k+1) / (3k+1)!
// solve w'' = z w with f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1.
// ---------------------------------------------------------------------------

AiryValues maclaurin(double z) {
  DD z2 = two_prod(z, z);
  DD z3 = dd_mul_d(z2, z);

  DD f = dd_from(1.0);
  DD g = dd_from(z);
  DD fp = dd_from(0.0);
  DD gp = dd_from(1.0);

  DD tu = f;   // f terms
  DD tv = g;   // g terms
  DD tp = dd_div_d(z2, 2.0);  // f' terms, starts at k=1
  DD tq = gp;  // g' terms

  for (int k = 1; k < kMaxSeriesTerms; ++k) {
    double k3 = 3.0 * k;
    tu = dd_div_d(dd_mul(tu, z3), k3 * (k3 - 1.0));
    tv = dd_div_d(dd_mul(tv, z3), (k3 + 1.0) * k3);
    if (k > 1) tp = dd_div_d(dd_mul(tp, z3), (k3 - 1.0) * (k3 - 3.0));
    tq = dd_div_d(dd_mul(tq, z3), k3 * (k3 - 2.0));

    f = dd_add(f, tu);
    g = dd_add(g, tv);
    fp = dd_add(fp, tp);
    gp = dd_add(gp, tq);

    double mag = std::fabs(f.hi) + std::fabs(g.hi) + 1.0;
    double largest = std::fabs(tu.hi) + std::fabs(tv.hi) + std::fabs(tp.hi) +
                     std::fabs(tq.hi);
    if (largest < 1e-35 * mag) break;
  }

  DD ai = dd_sub(dd_mul(kAi0, f), dd_mul(kMAip0, g));
  DD aip = dd_sub(dd_mul(kAi0, fp), dd_mul(kMAip0, gp));
  DD bi = dd_mul(kSqrt3, dd_add(dd_mul(kAi0, f), dd_mul(kMAip0, g)));
  DD bip = dd_mul(kSqrt3, dd_add(dd_mul(kAi0, fp), dd_mul(kMAip0, gp)));
  return {ai.hi + ai.lo, aip.hi + aip.lo, bi.hi + bi.lo, bip.hi + bip.lo};
}

// ---------------------------------------------------------------------------
// Asymptotic branch.  With zeta = (2/3)|z|^(3/2) and the classical
// coefficients u_k (u_0 = 1, u_k = u_{k-1} (6k-5)(6k-1)/(72k)) and
// d_k = -u_k (6k+1)/(6k-1):
//
//   z > 0:  Ai  =  exp(-zeta)/(2 sqrt(pi) z^(1/4)) * sum (-1)^k u_k zeta^-k
//           Ai' = -z^(1/4) exp(-zeta)/(2 sqrt(pi)) * sum (-1)^k d_k zeta^-k
//           Bi  =  exp(zeta)/(sqrt(pi) z^(1/4))    * sum u_k zeta^-k
//           Bi' =  z^(1/4) exp(zeta)/sqrt(pi)      * sum d_k zeta^-k
//
//   z < 0 (x = -z, theta = zeta + pi/4):
//           Ai  =  (sin(theta) Pu - cos(theta) Qu) / (sqrt(pi) x^(1/4))
//           Bi  =  (cos(theta) Pu + sin(theta) Qu) / (sqrt(pi) x^(1/4))
//           Ai' = -x^(1/4) (cos(theta) Pd + sin(theta) Qd) / sqrt(pi)
//           Bi' =  x^(1/4) (sin(theta) Pd - cos(theta) Qd) / sqrt(pi)
//   where Pu = sum (-1)^k u_{2k} zeta^-2k, Qu = sum (-1)^k u_{2k+1} zeta^-(2k+1)
//   and Pd, Qd likewise with d.
//
// Terms are summed until they stop decreasing or fall below 1e-18 of the
// partial sum; at the switch radius the smallest term is ~8e-14 relative.
// ---------------------------------------------------------------------------

struct AsymptoticSums {
  double su_alt;  // sum (-1)^k u_k zeta^-k
  double su;      // sum u_k zeta^-k
  double sd_alt;  // sum (-1)^k d_k zeta^-k
  double sd;      // sum d_k zeta^-k
  double pu, qu, pd, qd;  // even/odd splits with alternating signs
};

AsymptoticSums asymptotic_sums(double zeta) {
  AsymptoticSums s{1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0};
  double uk = 1.0;
  double prev = 1.0;
  double sign = 1.0;
  for (int k = 1; k < 64; ++k) {
    uk *= (6.0 * k - 5.0) * (6.0 * k - 1.0) / (72.0 * k);
    double tu = uk / std::pow(zeta, k);
    if (std::fabs(tu) >= prev) break;  // divergent tail reached
    prev = std::fabs(tu);
    double dk = -uk * (6.0 * k + 1.0) / (6.0 * k - 1.0);
    double td = dk / std::pow(zeta, k);
    sign = -sign;

    s.su_alt += sign * tu;
    s.su += tu;
    s.sd_alt += sign * td;
    s.sd += td;
    // Even/odd split: sign for index k in the oscillatory sums is
    // (-1)^(k/2) for even k and (-1)^((k-1)/2) for odd k.
    if (k % 2 == 0) {
      double es = (k / 2 % 2 == 0) ? 1.0 : -1.0;
      s.pu += es * tu;
      s.pd += es * td;
    } else {
      double os = ((k - 1) / 2 % 2 == 0) ? 1.0 : -1.0;
      s.qu += os * tu;
      s.qd += os * td;
    }
    if (std::fabs(tu) < 1e-18) break;
  }
  return s;
}

AiryValues asymptotic(double z) {
  if (z > 0.0) {
    double zeta = (2.0 / 3.0) * z * std::sqrt(z);
    AsymptoticSums s = asymptotic_sums(zeta);
    double z14 = std::pow(z, 0.25);
    double em = std::exp(-zeta);
    double ep = std::exp(zeta);
    return {em / (2.0 * kSqrtPi * z14) * s.su_alt,
            -z14 * em / (2.0 * kSqrtPi) * s.sd_alt,
            ep / (kSqrtPi * z14) * s.su,
            z14 * ep / kSqrtPi * s.sd};
  }
  double x = -z;
  double zeta = (2.0 / 3.0) * x * std::sqrt(x);
  AsymptoticSums s = asymptotic_sums(zeta);
  double x14 = std::pow(x, 0.25);
  double theta = zeta + kPi / 4.0;
  double sn = std::sin(theta);
  double cs = std::cos(theta);
  return {(sn * s.pu - cs * s.qu) / (kSqrtPi * x14),
          -x14 * (cs * s.pd + sn * s.qd) / kSqrtPi,
          (cs * s.pu + sn * s.qu) / (kSqrtPi * x14),
          x14 * (sn * s.pd - cs * s.qd) / kSqrtPi};
}

void check_overflow(double z) {
  if (z <= kAirySwitchRadius) return;
  double zeta = (2.0 / 3.0) * z * std::sqrt(z);
  double lnq = 0.25 * std::log(z);
  double ln_sqrt_pi = std::log(kSqrtPi);
  if (zeta + lnq - ln_sqrt_pi > kLnOverflow) {
    throw std::overflow_error("airy: Bi'(" + std::to_string(z) +
                              ") overflows double precision");
  }
  if (zeta - lnq - ln_sqrt_pi > kLnOverflow) {
    throw std::overflow_error("airy: Bi(" + std::to_string(z) +
                              ") overflows double precision");
  }
}

}  // namespace

namespace detail {

AiryValues airy_maclaurin(double z) { return maclaurin(z); }
AiryValues airy_asymptotic(double z) { return asymptotic(z); }

}  // namespace detail

AiryValues airy(double z) {
  if (!std::isfinite(z)) {
    throw std::domain_error("airy: argument must be finite");
  }
  if (std::fabs(z) > kAiryMaxArgument) {
    throw std::domain_error("airy: |z| = " + std::to_string(std::fabs(z)) +
                            " exceeds supported range " +
                            std::to_string(kAiryMaxArgument));
  }
  check_overflow(z);
  if (std::fabs(z) <= kAirySwitchRadius) return maclaurin(z);
  return asymptotic(z);
}

AiryValues airy_scaled(double z, double sigma) {
  AiryValues v = airy(sigma * z);
  return {v.ai, sigma * v.aip, v.bi, sigma * v.bip};
}

}  // namespace airystef
