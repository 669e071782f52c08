#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "benford/bignat.hpp"
#include "benford/collatz.hpp"
#include "benford/rmt.hpp"
#include "benford/stats.hpp"
#include "benford/zeta.hpp"

namespace benford {

// Named experiment configurations. The CLI presets and the acceptance suite
// both build on these, so a preset rerun is the acceptance run.

/// First digit of x_m / ((3/4)^m x_0) over an arithmetic progression of seeds.
struct RatioTableConfig {
  BigNat start{1};
  std::uint64_t stride = 6;
  std::uint64_t count = 100'000;
  std::size_t m = 10;
  unsigned base = 10;
  int workers = 1;
};

struct RatioTable {
  RatioTableConfig config;
  DigitHistogram histogram;
  std::vector<double> prediction;  // index d - 1
};

RatioTableConfig table_ratio_config(unsigned base);
RatioTable ratio_table(const RatioTableConfig& config);

/// Limiting law of the ratio digit: uniform on the powers of 2 when B = 2^n,
/// Benford otherwise.
std::vector<double> ratio_prediction(unsigned base);

/// Leading digit of B^u for u in [0, 1), snapping u within 1e-12 of a digit
/// boundary onto the boundary so lattice values like 1/4 in base 16 land on 2.
unsigned digit_of_log_mantissa(double u, unsigned base);

/// Iterates of one random seed with `digits` decimal digits.
struct BigSeedConfig {
  std::size_t digits = 100'000;
  unsigned base = 10;
  std::uint64_t seed = 1;
  IterationMode mode = IterationMode::remove_all_twos;
};

BigSeedConfig bignum_config(IterationMode mode, std::uint64_t seed);
DigitExperiment big_seed_experiment(const BigSeedConfig& config);

/// Digits of B^{(S_m - 2m) log_B 2 mod 1} under the geometric k-value model.
struct ModelConfig {
  std::size_t m = 10;
  unsigned base = 10;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  int workers = 1;
};

DigitHistogram geometric_model_histogram(const ModelConfig& config);

/// Structure Theorem sweep over every k-tuple of length <= max_m with sum <= max_sum.
struct StructureRow {
  std::vector<std::uint64_t> ktuple;
  InverseScan scan;
  PathProbability probability;
  double sigma = 0.0;  // binomial standard deviation of the empirical density
};

std::vector<StructureRow> structure_sweep(std::size_t max_m, std::uint64_t max_sum);

struct ZetaScanConfig {
  double t_start = 0.0;
  double t_end = 16383.75;
  double step = 0.25;
  SigmaMode mode = SigmaMode::fixed_at(0.5);
  unsigned base = 10;
  int workers = 1;
};

ZetaScanConfig figure1_config();
ZetaScan zeta_scan(const ZetaScanConfig& config);

struct CueConfig {
  int N = 64;
  std::uint64_t samples = 100'000;
  unsigned base = 10;
  std::uint64_t seed = 1;
  int workers = 1;
};

CueConfig cue_config(int N, std::uint64_t seed);

/// Equidistribution of k alpha mod 1 for alpha = log10 2.
struct EquidistConfig {
  std::size_t n_points = 1'000'000;
  int erdos_turan_m = 1000;
  std::uint64_t block_size = 10'000;
  std::uint64_t n_blocks = 20;
  std::uint64_t seed = 1;
};

struct IntervalTrial {
  std::uint64_t block = 0;
  double a = 0.0;
  double b = 0.0;
  std::uint64_t count = 0;
  double deviation = 0.0;  // |count - M (b - a)|
};

struct EquidistResult {
  DiscrepancyReport discrepancy;
  std::vector<IntervalTrial> trials;
};

EquidistResult log10_2_equidistribution(const EquidistConfig& config);

/// Theta identity residuals and Gaussian spreading checks.
struct PoissonRow {
  double sigma = 0.0;
  double residual = 0.0;
};

struct MassRow {
  double T = 0.0;
  double a = 0.0;
  double b = 0.0;
  double mass = 0.0;
  double error = 0.0;  // |mass - (b - a)|
};

struct PoissonCheck {
  std::vector<PoissonRow> theta;
  std::vector<MassRow> mass;
  double char_decay = 0.0;      // S(1)
  double char_decay_k1 = 0.0;   // 2 e^{-2 pi^2}
};

PoissonCheck poisson_check(const std::vector<double>& sigmas, double T);

}  // namespace benford
