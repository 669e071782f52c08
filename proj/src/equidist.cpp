#include "benford/equidist.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace benford {

double frac_mul(const SplitReal& alpha, std::uint64_t k) {
  const auto kd = static_cast<double>(k);
  const double product = kd * alpha.hi;
  const double product_error = std::fma(kd, alpha.hi, -product);
  double f = product - std::floor(product);
  f += product_error + kd * alpha.lo;
  f -= std::floor(f);
  return f >= 1.0 ? 0.0 : f;
}

std::vector<double> kalpha_points(const SplitReal& alpha, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 1; k <= n; ++k) out[k - 1] = frac_mul(alpha, k);
  return out;
}

std::vector<double> kalpha_points(double alpha, std::size_t n) { return kalpha_points(SplitReal{alpha, 0.0}, n); }

std::uint64_t interval_count(const SplitReal& alpha, std::uint64_t block, std::uint64_t block_size, double a,
                             double b) {
  std::uint64_t count = 0;
  const std::uint64_t start = block * block_size;
  for (std::uint64_t k = start; k < start + block_size; ++k) {
    const double x = frac_mul(alpha, k);
    if (x >= a && x < b) ++count;
  }
  return count;
}

HighPrec default_uncertainty() { return HighPrec("1e-500"); }

std::vector<Convergent> continued_fraction(const HighPrec& alpha, std::size_t depth, const HighPrec& uncertainty) {
  if (depth == 0) throw std::domain_error("continued_fraction: depth must be >= 1");
  if (alpha <= uncertainty) throw std::domain_error("continued_fraction: alpha must be positive");
  HighPrec x = alpha;
  HighPrec lo = alpha - uncertainty;
  HighPrec hi = alpha + uncertainty;
  BigNat p_prev(1), p_prev2(0), q_prev(0), q_prev2(1);
  const HighPrec max_quotient = HighPrec(std::numeric_limits<std::uint64_t>::max() / 2);
  const HighPrec rational_tolerance("1e-300");

  std::vector<Convergent> out;
  out.reserve(depth);
  for (std::size_t n = 0; n < depth; ++n) {
    const HighPrec a = floor(x);
    const HighPrec frac = x - a;
    if (floor(lo) != a || floor(hi) != a || frac == 0) {
      if (frac < rational_tolerance || 1 - frac < rational_tolerance) {
        throw std::runtime_error("continued_fraction: input is rational to working precision");
      }
      throw std::runtime_error("continued_fraction: requested depth " + std::to_string(depth) +
                               " exceeds the certified depth " + std::to_string(n));
    }
    if (a > max_quotient) throw std::runtime_error("continued_fraction: partial quotient overflow (near-rational input)");
    const auto quotient = a.convert_to<std::uint64_t>();

    BigNat p = p_prev;
    p.mul_small_inplace(quotient);
    p = p + p_prev2;
    BigNat q = q_prev;
    q.mul_small_inplace(quotient);
    q = q + q_prev2;

    Convergent c;
    c.partial_quotient = quotient;
    const HighPrec qh = to_highprec(q);
    c.log10_q = log10(qh).convert_to<double>();
    c.log10_error = log10(abs(alpha - to_highprec(p) / qh)).convert_to<double>();
    c.p = p;
    c.q = q;
    out.push_back(std::move(c));

    p_prev2 = std::move(p_prev);
    p_prev = std::move(p);
    q_prev2 = std::move(q_prev);
    q_prev = std::move(q);

    const HighPrec lo_frac = lo - a;
    const HighPrec hi_frac = hi - a;
    if (lo_frac <= 0) {
      if (n + 1 < depth) {
        throw std::runtime_error("continued_fraction: requested depth " + std::to_string(depth) +
                                 " exceeds the certified depth " + std::to_string(n + 1));
      }
      break;
    }
    x = 1 / frac;
    lo = 1 / hi_frac;
    hi = 1 / lo_frac;
  }
  return out;
}

namespace {

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

}  // namespace

IrrationalProbe type_probe(const HighPrec& alpha, std::size_t depth, std::span<const double> gamma_grid) {
  IrrationalProbe probe;
  probe.convergents = continued_fraction(alpha, depth);
  const std::size_t count = probe.convergents.size();
  const std::size_t tail_start = count >= 6 ? count / 2 : 0;
  std::vector<double> tail_logq;
  for (std::size_t i = tail_start; i < count; ++i) tail_logq.push_back(probe.convergents[i].log10_q);

  for (double gamma : gamma_grid) {
    ProbeRow row;
    row.gamma = gamma;
    std::vector<double> tail_quality;
    for (std::size_t i = 0; i < count; ++i) {
      const auto& c = probe.convergents[i];
      const double quality = (gamma + 1.0) * c.log10_q + c.log10_error;
      row.log10_quality.push_back(quality);
      if (i >= tail_start) tail_quality.push_back(quality);
    }
    row.tail_slope = least_squares_slope(tail_logq, tail_quality);
    row.trends_to_zero = row.tail_slope < 0.0;
    probe.rows.push_back(std::move(row));
  }

  // The tail slope is affine in gamma with unit coefficient, so the zero
  // crossing follows from the gamma = 0 slope alone.
  std::vector<double> tail_error;
  for (std::size_t i = tail_start; i < count; ++i) {
    tail_error.push_back(probe.convergents[i].log10_q + probe.convergents[i].log10_error);
  }
  probe.empirical_type = -least_squares_slope(tail_logq, tail_error);
  return probe;
}

double gaussian_density(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

double theta_identity_residual(double sigma, int cutoff) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw std::domain_error("theta_identity_residual: sigma must be > 0");
  // e^{-pi n^2 c} < 1e-18 once n > sqrt(41.45 / (pi c)).
  const double widest = std::max(sigma, 1.0 / sigma);
  const int needed = static_cast<int>(std::ceil(3.64 * widest)) + 2;
  const int n_max = std::max(cutoff, needed);
  double lhs_tail = 0.0;
  double rhs_tail = 0.0;
  for (int n = n_max; n >= 1; --n) {
    const double n2 = static_cast<double>(n) * n;
    lhs_tail += std::exp(-n2 * std::numbers::pi / (sigma * sigma));
    rhs_tail += std::exp(-n2 * std::numbers::pi * sigma * sigma);
  }
  const double lhs = (1.0 + 2.0 * lhs_tail) / sigma;
  const double rhs = 1.0 + 2.0 * rhs_tail;
  return std::fabs(lhs - rhs);
}

double gaussian_mod1_mass(double T, double a, double b, int k_window) {
  if (!(T > 0.0) || !std::isfinite(T)) throw std::domain_error("gaussian_mod1_mass: T must be > 0");
  if (!(a >= 0.0 && a < b && b <= 1.0)) throw std::domain_error("gaussian_mod1_mass: need 0 <= a < b <= 1");
  const int window = k_window > 0 ? k_window : static_cast<int>(std::ceil(9.0 * T)) + 2;
  auto integrand = [T, window](double x) {
    double sum = 0.0;
    for (int k = window; k >= 1; --k) {
      sum += gaussian_density((x + k) / T) + gaussian_density((x - k) / T);
    }
    return (sum + gaussian_density(x / T)) / T;
  };
  double error = 0.0;
  const double mass =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, a, b, 20, 1e-13, &error);
  return mass;
}

double condition_char_decay(double T) {
  if (!(T > 0.0)) throw std::domain_error("condition_char_decay: T must be > 0");
  const double c = 2.0 * std::numbers::pi * std::numbers::pi * T * T;
  double sum = 0.0;
  for (int k = 1;; ++k) {
    const double term = std::exp(-c * k * k) / k;
    if (term < 1e-18) break;
    sum += term;
  }
  return 2.0 * sum;
}

double condition_tail_mass(double T, double h) {
  if (!(T > 0.0) || h < 0.0) throw std::domain_error("condition_tail_mass: need T > 0 and h >= 0");
  return std::erfc(h / std::numbers::sqrt2);
}

}  // namespace benford
