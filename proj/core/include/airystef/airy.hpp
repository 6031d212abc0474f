#pragma once

namespace airystef {

/// Values of the Airy pair and their first derivatives at one argument.
///
/// Ai and Bi are the standard solutions of w'' = z w.  The pair satisfies
/// the Wronskian identity Ai(z) Bi'(z) - Ai'(z) Bi(z) = 1/pi for all z.
struct AiryValues {
  double ai;
  double aip;
  double bi;
  double bip;
};

/// Radius at which evaluation switches from the Maclaurin series to the
/// asymptotic expansions.  Chosen where both branches agree to ~1e-13
/// relative; pinned by a test.
inline constexpr double kAirySwitchRadius = 8.0;

/// Largest |z| accepted by airy().  Past ~104.2, Bi' exceeds the double
/// range anyway (see the overflow error below).
inline constexpr double kAiryMaxArgument = 105.0;

/// Evaluates Ai(z), Ai'(z), Bi(z), Bi'(z) on the real line.
///
/// Maclaurin f/g series in compensated (double-double) arithmetic for
/// |z| <= kAirySwitchRadius, asymptotic expansions elsewhere; the
/// oscillatory phase form with phase (2/3)|z|^(3/2) + pi/4 is used for
/// negative arguments.  Accuracy is ~1e-13 relative per component away
/// from the functions' zeros.
///
/// Throws std::domain_error for non-finite z or |z| > kAiryMaxArgument,
/// and std::overflow_error (naming Bi or Bi') when z is large enough that
/// the growing pair exceeds the double range.
AiryValues airy(double z);

/// Chain-rule wrapper: returns F(sigma*z) and d/dz F(sigma*z) = sigma*F'(sigma*z)
/// for F in {Ai, Bi}.  The Wronskian of the returned pair equals sigma/pi.
AiryValues airy_scaled(double z, double sigma);

namespace detail {

// Individual evaluation branches, exposed so tests can measure their
// agreement at the switch radius.
AiryValues airy_maclaurin(double z);
AiryValues airy_asymptotic(double z);

}  // namespace detail

}  // namespace airystef
