// Acceptance run: every criterion at full scale, one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "benford/equidist.hpp"
#include "benford/experiments.hpp"
#include "charpoly_oracle.hpp"

using namespace benford;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!ok) detail << " [failed: " << what << "]";
  }
};

// Results reused by the determinism rerun.
struct Baseline {
  RatioTable ratio10;
  DigitHistogram model{10};
  ZetaScan figure1;
  CueResult cue64;
};

Baseline baseline;

void ratio_base(Outcome& o, unsigned base, const std::vector<unsigned>& digits, double target, double tol) {
  const RatioTable t = ratio_table(table_ratio_config(base));
  o.detail << " base " << base << ":";
  for (unsigned d = 1; d < base; ++d) {
    const double pct = 100.0 * t.histogram.frequency(d);
    const bool listed = std::find(digits.begin(), digits.end(), d) != digits.end();
    if (listed) {
      o.detail << " d" << d << "=" << pct << "%";
      o.check(std::fabs(pct - target) < tol, "digit " + std::to_string(d) + " in base " + std::to_string(base));
    } else {
      o.check(t.histogram.count(d) == 0, "digit " + std::to_string(d) + " nonzero in base " + std::to_string(base));
    }
  }
}

void criterion1(Outcome& o) { ratio_base(o, 4, {1, 2}, 50.0, 1.0); }

void criterion2(Outcome& o) {
  ratio_base(o, 8, {1, 2, 4}, 100.0 / 3.0, 1.5);
  ratio_base(o, 16, {1, 2, 4, 8}, 25.0, 1.5);
}

void criterion3(Outcome& o) {
  baseline.ratio10 = ratio_table(table_ratio_config(10));
  const DigitHistogram& h = baseline.ratio10.histogram;
  const double observed[9] = {29.8, 17.9, 12.1, 10.0, 8.5, 9.8, 2.4, 8.7, 0.9};
  double tv = 0.0;
  for (unsigned d = 1; d <= 9; ++d) tv += std::fabs(h.frequency(d) - observed[d - 1] / 100.0);
  tv /= 2.0;
  const double d1 = 100.0 * h.frequency(1), d2 = 100.0 * h.frequency(2);
  o.detail << " d1=" << d1 << "% d2=" << d2 << "% tv_to_table=" << tv;
  o.check(std::fabs(d1 - 29.8) < 2.0, "digit 1");
  o.check(std::fabs(d2 - 17.9) < 2.0, "digit 2");
  o.check(tv < 0.04, "total variation");
}

void criterion4(Outcome& o) {
  const double critical = chi_square_critical(8, 0.05);
  for (IterationMode mode : {IterationMode::remove_all_twos, IterationMode::single_step}) {
    const DigitExperiment e = big_seed_experiment(bignum_config(mode, 1));
    const TestReport r = z_statistics(e.histogram);
    double max_z = 0.0;
    for (const auto& row : r.per_digit) max_z = std::max(max_z, std::fabs(row.z));
    const char* name = mode == IterationMode::remove_all_twos ? "remove" : "single";
    o.detail << " " << name << ": n=" << e.iterates << " chi2=" << r.chi_square << " max|z|=" << max_z;
    o.check(e.reached_one, std::string(name) + " orbit did not reach 1");
    o.check(r.chi_square < critical, std::string(name) + " chi2");
    o.check(max_z < 3.5, std::string(name) + " z");
  }
}

void criterion5(Outcome& o) {
  std::size_t tuples = 0;
  double worst = 0.0;
  try {
    for (const StructureRow& row : structure_sweep(3, 12)) {
      ++tuples;
      const double dev = std::fabs(row.probability.empirical - row.probability.predicted);
      worst = std::max(worst, row.sigma > 0 ? dev / row.sigma : 0.0);
      o.check(dev <= 3.0 * row.sigma, "density");
    }
  } catch (const std::exception& e) {
    o.check(false, e.what());
  }
  o.detail << " tuples=" << tuples << " worst_density_sigma=" << worst;
  o.check(tuples == 12 + 66 + 220, "tuple count");
}

void criterion6(Outcome& o) {
  const SeedRange seeds{BigNat::from_decimal("419753999998525"), 6, 100'000};
  const KValueStats s = kvalue_histogram(DghMap::collatz(), seeds, 10);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const double p = std::ldexp(1.0, -static_cast<int>(n));
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(s.total));
    worst = std::max(worst, std::fabs(s.frequency(n) - p) / sigma);
    o.check(std::fabs(s.frequency(n) - p) < 3.0 * sigma, "k = " + std::to_string(n));
  }
  o.detail << " total=" << s.total << " mean=" << s.mean << " var=" << s.variance << " worst_sigma=" << worst;
  o.check(std::fabs(s.mean - 2.0) < 0.02, "mean");
  o.check(std::fabs(s.variance - 2.0) < 0.05, "variance");
}

void criterion7(Outcome& o) {
  double worst = 0.0;
  for (double sigma : {0.1, 0.5, 1.0, 2.0, 10.0, 50.0}) worst = std::max(worst, theta_identity_residual(sigma));
  o.detail << " max_residual=" << worst;
  o.check(worst < 1e-12, "residual");
}

void criterion8(Outcome& o) {
  double worst = 0.0;
  for (auto [a, b] : {std::pair{0.0, 0.3}, {0.3, 0.7}, {0.2, 0.9}}) {
    worst = std::max(worst, std::fabs(gaussian_mod1_mass(10.0, a, b) - (b - a)));
  }
  const double s1 = condition_char_decay(1.0);
  const double k1 = 2.0 * std::exp(-2.0 * std::numbers::pi * std::numbers::pi);
  o.detail << " max_mass_error=" << worst << " S(1)=" << s1 << " closed_form=" << k1;
  o.check(worst < 1e-8, "mass");
  o.check(s1 < 1e-8, "S(1) size");
  o.check(std::fabs(s1 / k1 - 1.0) < 0.01, "S(1) closed form");
}

void criterion9(Outcome& o) {
  const EquidistConfig config;
  const EquidistResult r = log10_2_equidistribution(config);
  const double bound = std::pow(static_cast<double>(config.block_size), 0.9);
  double worst = 0.0;
  for (const auto& t : r.trials) worst = std::max(worst, t.deviation);
  o.detail << " N=" << r.discrepancy.n_points << " star=" << r.discrepancy.star
           << " erdos_turan=" << r.discrepancy.erdos_turan << " max_interval_dev=" << worst << " (M^0.9=" << bound
           << ")";
  o.check(r.discrepancy.star < 1e-3, "star");
  o.check(r.discrepancy.star < r.discrepancy.erdos_turan, "Erdos-Turan");
  o.check(r.trials.size() == config.n_blocks, "trial count");
  o.check(worst < bound, "interval deviation");
}

void criterion10(Outcome& o) {
  baseline.figure1 = zeta_scan(figure1_config());
  const ZetaScan& s = baseline.figure1;
  const double tv = tv_distance_to_benford(s.histogram);
  const double e2 = std::abs(zeta({2.0, 0.0}).value - std::numbers::pi * std::numbers::pi / 6.0);
  const double ehalf = std::abs(zeta({0.5, 0.0}).value - (-1.4603545088095868128894991525));
  o.detail << " points=" << s.samples.size() << " counted=" << s.histogram.total() << " near_zero=" << s.near_zero
           << " ambiguous=" << s.ambiguous << " tv=" << tv << " |err zeta(2)|=" << e2 << " |err zeta(1/2)|=" << ehalf;
  o.check(s.samples.size() == 65536, "grid size");
  o.check(s.failures == 0, "evaluation failures");
  o.check(tv < 0.03, "total variation");
  o.check(e2 < 1e-8, "zeta(2)");
  o.check(ehalf < 1e-8, "zeta(1/2)");
}

void criterion11(Outcome& o) {
  const CueConfig config = cue_config(64, 1);
  baseline.cue64 = cue_experiment(config.N, config.samples, config.base, config.seed, config.workers);
  const CueResult& r = baseline.cue64;
  const double var_rel = std::fabs(r.moments.variance / r.q2 - 1.0);
  const double chi64 = chi_square(r.histogram).statistic;
  o.detail << " var=" << r.moments.variance << " Q2=" << r.q2 << " skew=" << r.moments.skewness
           << " kurt=" << r.moments.kurtosis << " chi2(64)=" << chi64 << " resampled=" << r.resampled;
  o.check(var_rel < 0.05, "variance vs Q2");
  o.check(std::fabs(r.moments.skewness) < 0.05, "skewness");
  o.check(std::fabs(r.moments.kurtosis - 3.0) < 0.1, "kurtosis");
  o.check(chi64 < chi_square_critical(8, 0.01), "chi2");
  o.check(r.max_unitarity_residual < 1e-10, "unitarity");

  o.detail << " chi2 by N:";
  double chi4 = 0.0;
  for (int N : {4, 8, 16, 32}) {
    const CueResult small = cue_experiment(N, config.samples, config.base, config.seed);
    const double chi = chi_square(small.histogram).statistic;
    if (N == 4) chi4 = chi;
    o.detail << " " << N << "->" << chi;
  }
  o.detail << " 64->" << chi64;
  o.check(chi64 < chi4, "chi2 improvement N=4 -> N=64");

  RngStream rng(2024);
  double worst = 0.0;
  for (int N = 2; N <= 8; ++N) {
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexMatrix u = haar_unitary(N, rng);
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      worst = std::max(worst, std::fabs(log_abs_charpoly(u, theta) - oracle::log_abs_charpoly(u, theta)));
    }
  }
  o.detail << " small_N_oracle_max_diff=" << worst;
  o.check(worst < 1e-8, "small-N oracle");
}

void criterion12(Outcome& o) {
  RatioTableConfig rc = table_ratio_config(10);
  rc.workers = 3;
  o.check(ratio_table(rc).histogram == baseline.ratio10.histogram, "ratio table");

  ModelConfig mc;
  const DigitHistogram m1 = geometric_model_histogram(mc);
  mc.workers = 3;
  o.check(geometric_model_histogram(mc) == m1, "geometric model");

  ZetaScanConfig zc = figure1_config();
  zc.workers = 3;
  const ZetaScan z3 = zeta_scan(zc);
  bool same = z3.histogram == baseline.figure1.histogram && z3.samples.size() == baseline.figure1.samples.size();
  for (std::size_t i = 0; same && i < z3.samples.size(); ++i) same = z3.samples[i].value == baseline.figure1.samples[i].value;
  o.check(same, "zeta figure1");

  const CueConfig cc = cue_config(64, 1);
  const CueResult c3 = cue_experiment(cc.N, cc.samples, cc.base, cc.seed, 3);
  same = c3.histogram == baseline.cue64.histogram && c3.samples.size() == baseline.cue64.samples.size();
  for (std::size_t i = 0; same && i < c3.samples.size(); ++i) same = c3.samples[i].log_abs == baseline.cue64.samples[i].log_abs;
  o.check(same, "cue-n64");

  o.detail << " compared ratio(base 10), model, zeta figure1, cue-n64 at 1 vs 3 workers";
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria = {
      {1, criterion1}, {2, criterion2},   {3, criterion3},   {4, criterion4},
      {5, criterion5}, {6, criterion6},   {7, criterion7},   {8, criterion8},
      {9, criterion9}, {10, criterion10}, {11, criterion11}, {12, criterion12},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s (%.1fs)%s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
