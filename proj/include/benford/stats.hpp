#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace benford {

/// Leading-digit counts in base B; counts[d-1] holds digit d.
class DigitHistogram {
 public:
  explicit DigitHistogram(unsigned base = 10);

  void add(unsigned digit, std::uint64_t count = 1);
  /// Associative and commutative; bases must match.
  void merge(const DigitHistogram& other);

  [[nodiscard]] unsigned base() const { return base_; }
  [[nodiscard]] std::uint64_t total() const { return total_; }
  [[nodiscard]] std::uint64_t count(unsigned digit) const { return counts_.at(digit - 1); }
  [[nodiscard]] std::span<const std::uint64_t> counts() const { return counts_; }
  [[nodiscard]] double frequency(unsigned digit) const;

  friend bool operator==(const DigitHistogram&, const DigitHistogram&) = default;

 private:
  unsigned base_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// log_B(1 + 1/d) for 1 <= d <= B-1.
double benford_probability(unsigned digit, unsigned base);

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
};

/// Pearson statistic against Benford expectations, dof = B - 2.
ChiSquare chi_square(const DigitHistogram& hist);

/// Upper-tail critical value of chi^2 with `dof` degrees of freedom.
double chi_square_critical(int dof, double alpha);

struct DigitRow {
  unsigned digit = 0;
  double observed = 0.0;
  double benford = 0.0;
  double z = 0.0;
};

struct TestReport {
  unsigned base = 10;
  std::uint64_t total = 0;
  std::vector<DigitRow> per_digit;
  double chi_square = 0.0;
  int dof = 0;
  bool verdict_alpha05 = false;  // true: Benford not rejected at alpha = 0.05
};

/// Per-digit z = (p_hat - p) / sqrt(p (1 - p) / n), plus the chi^2 summary.
TestReport z_statistics(const DigitHistogram& hist);

/// Total-variation distance between the observed digit law and Benford.
double tv_distance_to_benford(const DigitHistogram& hist);

// Discrepancy of point sets in [0,1), half-open interval convention.

double star_discrepancy(std::span<const double> points);
double extreme_discrepancy(std::span<const double> points);
/// Erdos-Turan bound with the explicit constant C = 3.
double erdos_turan_bound(std::span<const double> points, int m);

inline constexpr double kErdosTuranConstant = 3.0;

struct DiscrepancyReport {
  std::size_t n_points = 0;
  double star = 0.0;
  double extreme = 0.0;
  double erdos_turan = 0.0;
  int m_used = 0;
};

DiscrepancyReport discrepancy_report(std::span<const double> points, int m);

}  // namespace benford
