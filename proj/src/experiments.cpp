#include "benford/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "benford/equidist.hpp"
#include "benford/highprec.hpp"
#include "benford/parallel.hpp"

namespace benford {

namespace {

constexpr std::uint64_t kSeedBlock = 1024;
constexpr std::uint64_t kModelBlock = 4096;
constexpr char kTableStart[] = "419753999998525";

}  // namespace

RatioTableConfig table_ratio_config(unsigned base) {
  RatioTableConfig config;
  config.start = BigNat::from_decimal(kTableStart);
  config.base = base;
  return config;
}

std::vector<double> ratio_prediction(unsigned base) {
  if (base < 2) throw std::domain_error("ratio_prediction: base must be >= 2");
  std::vector<double> p(base - 1, 0.0);
  if (std::has_single_bit(base) && base > 2) {
    const auto n = static_cast<unsigned>(std::countr_zero(base));
    for (unsigned j = 0; j < n; ++j) p[(1u << j) - 1] = 1.0 / n;
  } else {
    for (unsigned d = 1; d < base; ++d) p[d - 1] = benford_probability(d, base);
  }
  return p;
}

RatioTable ratio_table(const RatioTableConfig& config) {
  if (config.count == 0) throw std::domain_error("ratio_table: empty seed range");
  if (config.base < 2) throw std::domain_error("ratio_table: base must be >= 2");
  const DghMap map = DghMap::collatz();
  const std::uint64_t n_blocks = (config.count + kSeedBlock - 1) / kSeedBlock;
  std::vector<DigitHistogram> partial(n_blocks, DigitHistogram(config.base));

  parallel_for_blocks(n_blocks, config.workers, [&](std::size_t b) {
    const std::uint64_t begin = b * kSeedBlock;
    const std::uint64_t end = std::min(config.count, begin + kSeedBlock);
    BigNat seed = config.start + BigNat(config.stride) * BigNat(begin);
    for (std::uint64_t i = begin; i < end; ++i) {
      if (!map.in_domain(seed)) throw std::domain_error("ratio_table: seed outside the domain of 3x+1");
      BigNat x = seed;
      for (std::size_t j = 0; j < config.m; ++j) step_inplace(map, x);
      partial[b].add(ratio_leading_digit(seed, x, config.m, config.base));
      seed.add_small_inplace(config.stride);
    }
  });

  RatioTable table{config, DigitHistogram(config.base), ratio_prediction(config.base)};
  for (const auto& h : partial) table.histogram.merge(h);
  return table;
}

unsigned digit_of_log_mantissa(double u, unsigned base) {
  if (base < 2) throw std::domain_error("digit_of_log_mantissa: base must be >= 2");
  const double log_base = std::log(static_cast<double>(base));
  for (unsigned d = 2; d < base; ++d) {
    const double boundary = std::log(static_cast<double>(d)) / log_base;
    if (std::fabs(u - boundary) < 1e-12) return d;
  }
  const auto digit = static_cast<unsigned>(std::pow(static_cast<double>(base), u));
  return std::clamp(digit, 1u, base - 1);
}

BigSeedConfig bignum_config(IterationMode mode, std::uint64_t seed) {
  BigSeedConfig config;
  config.mode = mode;
  config.seed = seed;
  return config;
}

DigitExperiment big_seed_experiment(const BigSeedConfig& config) {
  if (config.digits < 1) throw std::domain_error("big_seed_experiment: need at least one digit");
  RngStream rng(config.seed);
  BigNat x0 = random_bignat(config.digits, 10, rng);
  if (x0 < BigNat(2)) x0 = BigNat(2);
  return iterate_digit_experiment(x0, config.mode, config.base);
}

DigitHistogram geometric_model_histogram(const ModelConfig& config) {
  if (config.samples == 0) throw std::domain_error("geometric_model_histogram: need at least one sample");
  const std::uint64_t n_blocks = (config.samples + kModelBlock - 1) / kModelBlock;
  std::vector<DigitHistogram> partial(n_blocks, DigitHistogram(config.base));
  const RngStream root(config.seed);
  parallel_for_blocks(n_blocks, config.workers, [&](std::size_t b) {
    RngStream rng = root.split(b);
    const std::uint64_t end = std::min(config.samples, (b + 1) * kModelBlock);
    for (std::uint64_t i = b * kModelBlock; i < end; ++i) {
      const double u = geometric_model_sample(config.m, config.base, rng);
      partial[b].add(digit_of_log_mantissa(u, config.base));
    }
  });
  DigitHistogram total(config.base);
  for (const auto& h : partial) total.merge(h);
  return total;
}

std::vector<StructureRow> structure_sweep(std::size_t max_m, std::uint64_t max_sum) {
  std::vector<StructureRow> rows;
  std::vector<std::uint64_t> tuple;
  // Depth-first enumeration in lexicographic order.
  auto visit = [&](auto&& self, std::uint64_t sum) -> void {
    if (!tuple.empty()) {
      const std::uint64_t T = 4 * (std::uint64_t{6} << sum);
      StructureRow row;
      row.ktuple = tuple;
      row.scan = inverse_path_bruteforce(tuple, T);
      row.probability = path_probability_check(tuple, T);
      const double p = row.probability.predicted;
      row.sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(row.probability.domain_size));
      rows.push_back(std::move(row));
    }
    if (tuple.size() == max_m) return;
    for (std::uint64_t k = 1; sum + k <= max_sum; ++k) {
      tuple.push_back(k);
      self(self, sum + k);
      tuple.pop_back();
    }
  };
  visit(visit, 0);
  return rows;
}

ZetaScanConfig figure1_config() { return {}; }

ZetaScan zeta_scan(const ZetaScanConfig& config) {
  return scan_line(config.t_start, config.t_end, config.step, config.mode, config.base, config.workers);
}

CueConfig cue_config(int N, std::uint64_t seed) {
  CueConfig config;
  config.N = N;
  config.seed = seed;
  return config;
}

EquidistResult log10_2_equidistribution(const EquidistConfig& config) {
  const HighPrec alpha = log10(HighPrec(2));
  const SplitReal a = split(alpha);
  EquidistResult out;
  const std::vector<double> points = kalpha_points(a, config.n_points);
  out.discrepancy = discrepancy_report(points, config.erdos_turan_m);

  RngStream rng(config.seed);
  const std::uint64_t max_block = config.block_size == 0 ? 0 : (std::uint64_t{1} << 40) / config.block_size;
  for (std::uint64_t i = 0; i < config.n_blocks; ++i) {
    IntervalTrial trial;
    trial.block = rng.uniform_int(max_block);
    double x = rng.uniform();
    double y = rng.uniform();
    if (x > y) std::swap(x, y);
    trial.a = x;
    trial.b = y;
    trial.count = interval_count(a, trial.block, config.block_size, x, y);
    trial.deviation = std::fabs(static_cast<double>(trial.count) - static_cast<double>(config.block_size) * (y - x));
    out.trials.push_back(trial);
  }
  return out;
}

PoissonCheck poisson_check(const std::vector<double>& sigmas, double T) {
  PoissonCheck out;
  for (double s : sigmas) out.theta.push_back({s, theta_identity_residual(s)});
  const std::pair<double, double> intervals[] = {{0.0, 0.3}, {0.3, 0.7}, {0.2, 0.9}};
  for (auto [a, b] : intervals) {
    const double mass = gaussian_mod1_mass(T, a, b);
    out.mass.push_back({T, a, b, mass, std::fabs(mass - (b - a))});
  }
  out.char_decay = condition_char_decay(1.0);
  out.char_decay_k1 = 2.0 * std::exp(-2.0 * std::numbers::pi * std::numbers::pi);
  return out;
}

}  // namespace benford
