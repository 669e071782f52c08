#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "benford/rng.hpp"
#include "benford/stats.hpp"

using namespace benford;

namespace {

// sup over a of |#{x < a}/N - a| and |#{x <= a}/N - a|, by brute force.
double naive_star(std::vector<double> xs) {
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (double a : xs) {
    double below = 0, at_or_below = 0;
    for (double x : xs) {
      below += x < a;
      at_or_below += x <= a;
    }
    d = std::max({d, std::fabs(below / n - a), std::fabs(at_or_below / n - a)});
  }
  return d;
}

// sup over intervals inside [0, 1], open and closed, by brute force.
double naive_extreme(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  const double nd = static_cast<double>(n);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      d = std::max(d, static_cast<double>(j - i + 1) / nd - (xs[j] - xs[i]));
    }
  }
  std::vector<double> ext{0.0};
  ext.insert(ext.end(), xs.begin(), xs.end());
  ext.push_back(1.0);
  for (std::size_t i = 0; i < ext.size(); ++i) {
    for (std::size_t j = i + 1; j < ext.size(); ++j) {
      d = std::max(d, (ext[j] - ext[i]) - static_cast<double>(j - i - 1) / nd);
    }
  }
  return d;
}

}  // namespace

TEST_CASE("Benford probabilities") {
  CHECK(benford_probability(1, 10) == doctest::Approx(0.30102999566398120).epsilon(1e-15));
  CHECK(benford_probability(9, 10) == doctest::Approx(0.04575749056067513).epsilon(1e-15));
  for (unsigned b : {2u, 3u, 10u, 16u}) {
    double s = 0.0;
    for (unsigned d = 1; d < b; ++d) s += benford_probability(d, b);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK_THROWS(benford_probability(0, 10));
  CHECK_THROWS(benford_probability(10, 10));
}

TEST_CASE("histogram merge is associative and checks bases") {
  DigitHistogram a(10), b(10), c(10);
  a.add(1, 5);
  b.add(2, 3);
  c.add(9);
  DigitHistogram left = a;
  left.merge(b);
  left.merge(c);
  DigitHistogram right = b;
  right.merge(c);
  DigitHistogram ac = a;
  ac.merge(right);
  CHECK(left == ac);
  CHECK(left.total() == 9);
  CHECK(left.frequency(1) == doctest::Approx(5.0 / 9.0));
  CHECK_THROWS(a.merge(DigitHistogram(8)));
  CHECK_THROWS(a.add(0));
  CHECK_THROWS(a.add(10));
}

TEST_CASE("chi-square against a hand computation") {
  DigitHistogram h(10);
  const std::uint64_t counts[9] = {40, 10, 10, 10, 10, 5, 5, 5, 5};
  double expected_stat = 0.0;
  for (unsigned d = 1; d <= 9; ++d) {
    h.add(d, counts[d - 1]);
    const double e = 100.0 * std::log10(1.0 + 1.0 / d);
    expected_stat += (static_cast<double>(counts[d - 1]) - e) * (static_cast<double>(counts[d - 1]) - e) / e;
  }
  const ChiSquare cs = chi_square(h);
  CHECK(cs.dof == 8);
  CHECK(cs.statistic == doctest::Approx(expected_stat).epsilon(1e-12));
  CHECK_THROWS(chi_square(DigitHistogram(10)));
}

TEST_CASE("chi-square critical values") {
  CHECK(chi_square_critical(8, 0.05) == doctest::Approx(15.507313).epsilon(1e-6));
  CHECK(chi_square_critical(8, 0.01) == doctest::Approx(20.090235).epsilon(1e-6));
  CHECK(chi_square_critical(1, 0.05) == doctest::Approx(3.841459).epsilon(1e-6));
}

TEST_CASE("uniform digits are strongly rejected, Benford counts are not") {
  DigitHistogram uniform(10);
  for (unsigned d = 1; d <= 9; ++d) uniform.add(d, 1000);
  const TestReport r = z_statistics(uniform);
  CHECK(r.chi_square > 1000.0);
  CHECK_FALSE(r.verdict_alpha05);
  CHECK(r.per_digit[0].z < -20.0);

  DigitHistogram benford(10);
  for (unsigned d = 1; d <= 9; ++d) benford.add(d, static_cast<std::uint64_t>(std::llround(1e6 * benford_probability(d, 10))));
  const TestReport s = z_statistics(benford);
  CHECK(s.chi_square < 0.01);
  CHECK(s.verdict_alpha05);
  CHECK(tv_distance_to_benford(benford) < 1e-5);
  CHECK(tv_distance_to_benford(uniform) == doctest::Approx(0.30103 + 0.176091 + 0.124939 - 3.0 / 9).epsilon(1e-4));
}

TEST_CASE("discrepancy small cases") {
  const std::vector<double> one{0.5};
  CHECK(star_discrepancy(one) == doctest::Approx(0.5));
  CHECK(extreme_discrepancy(one) == doctest::Approx(1.0));
  std::vector<double> grid;
  for (int i = 0; i < 10; ++i) grid.push_back((i + 0.5) / 10.0);
  CHECK(star_discrepancy(grid) == doctest::Approx(0.05));
  CHECK(extreme_discrepancy(grid) == doctest::Approx(0.1));
  CHECK_THROWS_AS(star_discrepancy(std::vector<double>{}), std::domain_error);
  CHECK_THROWS_AS(star_discrepancy(std::vector<double>{1.0}), std::domain_error);
  CHECK_THROWS_AS(extreme_discrepancy(std::vector<double>{-0.1}), std::domain_error);
}

TEST_CASE("discrepancy matches brute force, and star <= extreme <= 2 star") {
  RngStream rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> xs(1 + rng.uniform_int(60));
    for (double& x : xs) x = rng.uniform();
    const double star = star_discrepancy(xs);
    const double ext = extreme_discrepancy(xs);
    CHECK(star == doctest::Approx(naive_star(xs)).epsilon(1e-12));
    CHECK(ext == doctest::Approx(naive_extreme(xs)).epsilon(1e-12));
    CHECK(star <= ext + 1e-15);
    CHECK(ext <= 2.0 * star + 1e-15);
  }
}

TEST_CASE("Erdos-Turan bound dominates the discrepancy") {
  RngStream rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> xs(10 + rng.uniform_int(500));
    for (double& x : xs) x = rng.uniform();
    for (int m : {1, 5, 40}) CHECK(erdos_turan_bound(xs, m) >= extreme_discrepancy(xs));
  }
  CHECK_THROWS(erdos_turan_bound(std::vector<double>{0.1}, 0));
}
