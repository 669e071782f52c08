#include "benford/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace benford {

DigitHistogram::DigitHistogram(unsigned base) : base_(base) {
  if (base < 2) throw std::domain_error("histogram base must be >= 2");
  counts_.assign(base - 1, 0);
}

void DigitHistogram::add(unsigned digit, std::uint64_t count) {
  if (digit < 1 || digit >= base_) throw std::domain_error("digit out of range for histogram base");
  counts_[digit - 1] += count;
  total_ += count;
}

void DigitHistogram::merge(const DigitHistogram& other) {
  if (other.base_ != base_) throw std::invalid_argument("cannot merge histograms of different bases");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

double DigitHistogram::frequency(unsigned digit) const {
  return total_ == 0 ? 0.0 : static_cast<double>(count(digit)) / static_cast<double>(total_);
}

double benford_probability(unsigned digit, unsigned base) {
  if (base < 2 || digit < 1 || digit >= base) throw std::domain_error("benford_probability: digit out of range");
  return std::log1p(1.0 / digit) / std::log(static_cast<double>(base));
}

ChiSquare chi_square(const DigitHistogram& hist) {
  if (hist.total() == 0) throw std::domain_error("chi_square: empty histogram");
  const auto n = static_cast<double>(hist.total());
  double stat = 0.0;
  for (unsigned d = 1; d < hist.base(); ++d) {
    const double expected = n * benford_probability(d, hist.base());
    const double diff = static_cast<double>(hist.count(d)) - expected;
    stat += diff * diff / expected;
  }
  return {stat, static_cast<int>(hist.base()) - 2};
}

double chi_square_critical(int dof, double alpha) {
  if (dof < 1) throw std::domain_error("chi_square_critical: dof must be >= 1");
  const boost::math::chi_squared_distribution<double> dist(dof);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

TestReport z_statistics(const DigitHistogram& hist) {
  if (hist.total() == 0) throw std::domain_error("z_statistics: empty histogram");
  TestReport report;
  report.base = hist.base();
  report.total = hist.total();
  const auto n = static_cast<double>(hist.total());
  for (unsigned d = 1; d < hist.base(); ++d) {
    const double p = benford_probability(d, hist.base());
    const double observed = hist.frequency(d);
    report.per_digit.push_back({d, observed, p, (observed - p) / std::sqrt(p * (1.0 - p) / n)});
  }
  const ChiSquare chi = chi_square(hist);
  report.chi_square = chi.statistic;
  report.dof = chi.dof;
  report.verdict_alpha05 = chi.dof >= 1 ? chi.statistic < chi_square_critical(chi.dof, 0.05) : true;
  return report;
}

double tv_distance_to_benford(const DigitHistogram& hist) {
  double tv = 0.0;
  for (unsigned d = 1; d < hist.base(); ++d) {
    tv += std::fabs(hist.frequency(d) - benford_probability(d, hist.base()));
  }
  return 0.5 * tv;
}

namespace {

std::vector<double> sorted_unit_points(std::span<const double> points) {
  if (points.empty()) throw std::domain_error("discrepancy of an empty point set");
  std::vector<double> sorted(points.begin(), points.end());
  for (double x : sorted) {
    if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("discrepancy points must lie in [0,1)");
  }
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

double star_discrepancy(std::span<const double> points) {
  const auto sorted = sorted_unit_points(points);
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double rank = static_cast<double>(i + 1);
    d = std::max({d, rank / n - sorted[i], sorted[i] - (rank - 1.0) / n});
  }
  return d;
}

double extreme_discrepancy(std::span<const double> points) {
  const auto sorted = sorted_unit_points(points);
  const auto n = static_cast<double>(sorted.size());
  double hi = -1.0;
  double lo = 2.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double gap = static_cast<double>(i + 1) / n - sorted[i];
    hi = std::max(hi, gap);
    lo = std::min(lo, gap);
  }
  return 1.0 / n + hi - lo;
}

double erdos_turan_bound(std::span<const double> points, int m) {
  if (m < 1) throw std::domain_error("erdos_turan_bound: m must be >= 1");
  if (points.empty()) throw std::domain_error("erdos_turan_bound: empty point set");
  const auto terms = static_cast<std::size_t>(m);
  std::vector<double> sum_re(terms, 0.0);
  std::vector<double> sum_im(terms, 0.0);
  for (double x : points) {
    const double angle = 2.0 * std::numbers::pi * x;
    const double w_re = std::cos(angle);
    const double w_im = std::sin(angle);
    double z_re = w_re;
    double z_im = w_im;
    for (std::size_t h = 0; h < terms; ++h) {
      sum_re[h] += z_re;
      sum_im[h] += z_im;
      const double next_re = z_re * w_re - z_im * w_im;
      z_im = z_re * w_im + z_im * w_re;
      z_re = next_re;
    }
  }
  const auto n = static_cast<double>(points.size());
  double total = 1.0 / m;
  for (std::size_t h = 0; h < terms; ++h) {
    total += std::hypot(sum_re[h], sum_im[h]) / n / static_cast<double>(h + 1);
  }
  return kErdosTuranConstant * total;
}

DiscrepancyReport discrepancy_report(std::span<const double> points, int m) {
  return {points.size(), star_discrepancy(points), extreme_discrepancy(points), erdos_turan_bound(points, m), m};
}

}  // namespace benford
