#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "benford/bignat.hpp"
#include "benford/highprec.hpp"

namespace benford {

/// frac(k * alpha) with alpha carried as hi + lo; exact product splitting keeps
/// the error near one ulp of the result for k up to 2^53.
double frac_mul(const SplitReal& alpha, std::uint64_t k);

/// {k * alpha mod 1 : k = 1..n}.
std::vector<double> kalpha_points(const SplitReal& alpha, std::size_t n);
std::vector<double> kalpha_points(double alpha, std::size_t n);

/// #{k in [block * M, (block + 1) * M) : k * alpha mod 1 in [a, b)}.
std::uint64_t interval_count(const SplitReal& alpha, std::uint64_t block, std::uint64_t block_size, double a,
                             double b);

struct Convergent {
  BigNat p;
  BigNat q;
  std::uint64_t partial_quotient = 0;
  double log10_q = 0.0;
  double log10_error = 0.0;  // log10 |alpha - p/q|
};

/// Default half-width of the uncertainty interval around a HighPrec input.
HighPrec default_uncertainty();

/// First `depth` convergents of the simple continued fraction of alpha > 0.
///
/// Partial quotients are certified by running the expansion on both ends of
/// [alpha - uncertainty, alpha + uncertainty]; asking for more convergents than
/// agree on both ends throws std::runtime_error, as does a rational input.
std::vector<Convergent> continued_fraction(const HighPrec& alpha, std::size_t depth,
                                           const HighPrec& uncertainty = default_uncertainty());

struct ProbeRow {
  double gamma = 0.0;
  std::vector<double> log10_quality;  // log10 q^(gamma+1) |alpha - p/q| per convergent
  double tail_slope = 0.0;            // d log10(quality) / d log10(q) over the tail
  bool trends_to_zero = false;
};

struct IrrationalProbe {
  std::vector<Convergent> convergents;
  std::vector<ProbeRow> rows;
  /// Crossing point of tail_slope(gamma) = 0; about 1 for badly approximable
  /// and typical numbers.
  double empirical_type = 0.0;
};

IrrationalProbe type_probe(const HighPrec& alpha, std::size_t depth, std::span<const double> gamma_grid);

/// Standard normal density.
double gaussian_density(double x);

/// |(1/s) sum e^{-n^2 pi / s^2} - sum e^{-n^2 pi s^2}| with |n| <= cutoff; the
/// cutoff is enlarged until omitted terms are below 1e-18.
double theta_identity_residual(double sigma, int cutoff = 0);

/// Probability that a N(0, T^2) variable lands in [a, b] mod 1, summed over
/// shifts |k| <= k_window (0 picks a window covering 9 standard deviations)
/// and integrated by adaptive Gauss-Kronrod quadrature.
double gaussian_mod1_mass(double T, double a, double b, int k_window = 0);

/// sum_{k != 0} |f_hat(T k) / k| for the standard Gaussian, f_hat(y) = e^{-2 pi^2 y^2}.
double condition_char_decay(double T);

/// Gaussian mass outside [-T h, T h] for the density (1/T) eta(t/T); equals 2(1 - Phi(h)).
double condition_tail_mass(double T, double h);

}  // namespace benford
