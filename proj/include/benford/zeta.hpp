#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "benford/stats.hpp"

namespace benford {

enum class ZetaMethod { eta_series, euler_maclaurin, riemann_siegel };

struct ZetaValue {
  std::complex<double> value;
  double error = 0.0;  // absolute error estimate
  ZetaMethod method = ZetaMethod::eta_series;
};

/// Riemann zeta for Re(s) >= 0, s != 1, |Im(s)| <= 1e5.
///
/// |t| <= 40: alternating eta series with Borwein acceleration;
/// sigma = 1/2, t >= 200: Riemann-Siegel with corrections C0..C4;
/// otherwise: Euler-Maclaurin.
/// Throws std::domain_error at the pole and std::runtime_error outside the
/// supported region.
ZetaValue zeta(std::complex<double> s);

// Individual routes, exposed for cross-checks.
ZetaValue zeta_eta_series(std::complex<double> s);
ZetaValue zeta_euler_maclaurin(std::complex<double> s);
/// zeta(1/2 + it) from Z(t); t >= 10.
ZetaValue zeta_riemann_siegel(double t);

/// Riemann-Siegel theta via its asymptotic series; t >= 10.
double riemann_siegel_theta(double t);

struct RiemannSiegelZ {
  double z = 0.0;
  double error = 0.0;
};
RiemannSiegelZ riemann_siegel_z(double t);

/// sigma_T = 1/2 + (log T)^-delta; T > e, delta in (0, 1).
double sigma_T(double T, double delta);

/// aleph * log(min(log T, 1 / (sigma - 1/2))), the O(1) term taken as 0.
double psi_variance(double sigma, double T, double aleph);

/// Log-normal law parameters for values near the critical line.
struct HejhalParams {
  double delta = 0.5;
  double kappa = 2.5;
  double aleph = 1.0;

  [[nodiscard]] double sigma_of_T(double T) const { return sigma_T(T, delta); }
  [[nodiscard]] double psi_of_T(double T) const { return psi_variance(sigma_of_T(T), T, aleph); }
};

struct SigmaMode {
  enum class Kind { fixed, near_critical } kind = Kind::fixed;
  double sigma = 0.5;
  double delta = 0.5;

  static SigmaMode fixed_at(double sigma) { return {Kind::fixed, sigma, 0.5}; }
  static SigmaMode near_critical(double delta) { return {Kind::near_critical, 0.5, delta}; }
};

struct ZetaSample {
  double t = 0.0;
  double sigma = 0.0;
  std::complex<double> value;
  double abs = 0.0;
  double log_abs = 0.0;
  unsigned leading_digit = 0;  // 0 when the sample was excluded from the histogram
  double cert_err = 0.0;
};

struct ZetaScan {
  std::vector<ZetaSample> samples;
  DigitHistogram histogram;
  std::uint64_t near_zero = 0;    // |zeta| below 10x the error estimate
  std::uint64_t ambiguous = 0;    // digit undecided even after re-evaluation
  std::uint64_t failures = 0;     // evaluation errors (e.g. sigma_T undefined)
};

/// Evaluates the grid t_start + k * step <= t_end and accumulates leading
/// digits of |zeta|. Samples whose error band straddles a digit boundary are
/// re-evaluated with Euler-Maclaurin and dropped if still undecided.
ZetaScan scan_line(double t_start, double t_end, double step, const SigmaMode& mode, unsigned base,
                   int workers = 1);

}  // namespace benford
