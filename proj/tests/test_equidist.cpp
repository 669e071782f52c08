#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "benford/equidist.hpp"
#include "benford/highprec.hpp"
#include "benford/rng.hpp"
#include "benford/stats.hpp"

using namespace benford;

namespace {

std::vector<std::uint64_t> quotients(const std::vector<Convergent>& cs) {
  std::vector<std::uint64_t> out;
  for (const auto& c : cs) out.push_back(c.partial_quotient);
  return out;
}

// Fourier series of the wrapped N(0, T^2) density, integrated over [a, b].
double wrapped_gaussian_mass(double T, double a, double b) {
  double s = b - a;
  for (int k = 1; k < 60; ++k) {
    const double damp = std::exp(-2.0 * std::numbers::pi * std::numbers::pi * T * T * k * k);
    s += damp * (std::sin(2.0 * std::numbers::pi * k * b) - std::sin(2.0 * std::numbers::pi * k * a)) /
         (std::numbers::pi * k);
  }
  return s;
}

}  // namespace

TEST_CASE("continued fractions of classical constants") {
  const HighPrec sqrt2 = sqrt(HighPrec(2));
  auto q = quotients(continued_fraction(sqrt2, 40));
  CHECK(q[0] == 1);
  for (std::size_t i = 1; i < q.size(); ++i) CHECK(q[i] == 2);

  CHECK(quotients(continued_fraction(log10(HighPrec(2)), 14)) ==
        std::vector<std::uint64_t>{0, 3, 3, 9, 2, 2, 4, 6, 2, 1, 1, 3, 1, 18});
  CHECK(quotients(continued_fraction(boost::math::constants::pi<HighPrec>(), 13)) ==
        std::vector<std::uint64_t>{3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14});
  CHECK(quotients(continued_fraction(boost::math::constants::e<HighPrec>(), 12)) ==
        std::vector<std::uint64_t>{2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8});

  const auto pi_cf = continued_fraction(boost::math::constants::pi<HighPrec>(), 4);
  CHECK(pi_cf[1].p == BigNat(22));
  CHECK(pi_cf[1].q == BigNat(7));
  CHECK(pi_cf[3].p == BigNat(355));
  CHECK(pi_cf[3].q == BigNat(113));
}

TEST_CASE("convergents satisfy |alpha - p/q| < 1/q^2") {
  const auto cs = continued_fraction(sqrt(HighPrec(3)), 200);
  for (const auto& c : cs) CHECK(c.log10_error < -2.0 * c.log10_q + 1e-9);
}

TEST_CASE("continued fraction refuses uncertified depth and rationals") {
  CHECK_THROWS_AS(continued_fraction(sqrt(HighPrec(2)), 2000), std::runtime_error);
  CHECK_THROWS_AS(continued_fraction(HighPrec(7) / 4, 10), std::runtime_error);
  CHECK_THROWS_AS(continued_fraction(HighPrec(-1), 3), std::domain_error);
  // A decimal known to 4 places certifies only a few quotients.
  CHECK_THROWS_AS(continued_fraction(HighPrec("1.4142"), 10, HighPrec("0.00005")), std::runtime_error);
  CHECK(continued_fraction(HighPrec("1.4142"), 3, HighPrec("0.00005")).size() == 3);
}

TEST_CASE("irrationality type probe") {
  const std::vector<double> grid{0.0, 0.5, 1.0, 1.5, 2.0};
  for (const HighPrec& alpha : {sqrt(HighPrec(2)), (1 + sqrt(HighPrec(5))) / 2}) {
    const IrrationalProbe p = type_probe(alpha, 300, grid);
    CHECK(p.empirical_type == doctest::Approx(1.0).epsilon(0.02));
    // q^(gamma+1) |alpha - p/q| behaves like q^(gamma-1) along convergents.
    CHECK(p.rows[0].trends_to_zero);
    CHECK_FALSE(p.rows[4].trends_to_zero);
  }
  const IrrationalProbe l = type_probe(log10(HighPrec(2)), 300, grid);
  CHECK(l.empirical_type > 0.8);
  CHECK(l.empirical_type < 1.3);
}

TEST_CASE("frac_mul keeps k alpha mod 1 accurate for huge k") {
  const HighPrec alpha = log10(HighPrec(2));
  const SplitReal s = split(alpha);
  RngStream rng(8);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t k = rng.uniform_int(std::uint64_t{1} << 53);
    const HighPrec exact = alpha * HighPrec(k);
    const double ref = HighPrec(exact - floor(exact)).convert_to<double>();
    const double got = frac_mul(s, k);
    double diff = std::fabs(got - ref);
    diff = std::min(diff, 1.0 - diff);
    CHECK(diff < 1e-15);
    CHECK(got >= 0.0);
    CHECK(got < 1.0);
  }
}

TEST_CASE("interval_count matches direct counting") {
  const SplitReal s = split(sqrt(HighPrec(2)));
  const std::uint64_t M = 5000;
  for (std::uint64_t block : {0u, 3u, 1000u}) {
    const double a = 0.17, b = 0.61;
    std::uint64_t direct = 0;
    for (std::uint64_t k = block * M; k < (block + 1) * M; ++k) {
      const double x = frac_mul(s, k);
      direct += (x >= a && x < b);
    }
    CHECK(interval_count(s, block, M, a, b) == direct);
  }
}

TEST_CASE("k log10 2 points have small discrepancy") {
  const auto points = kalpha_points(split(log10(HighPrec(2))), 20000);
  const DiscrepancyReport r = discrepancy_report(points, 200);
  CHECK(r.star < 2e-3);
  CHECK(r.star <= r.extreme);
  CHECK(r.extreme <= r.erdos_turan);
}

TEST_CASE("theta identity") {
  for (double sigma : {0.1, 0.3, 0.5, 1.0, 2.0, 10.0, 50.0}) CHECK(theta_identity_residual(sigma) < 1e-12);
  // sigma = 1 is the fixed point of the identity.
  CHECK(theta_identity_residual(1.0) < 1e-15);
  CHECK_THROWS_AS(theta_identity_residual(0.0), std::domain_error);
}

TEST_CASE("Gaussian mass mod 1 against its Fourier series") {
  CHECK(gaussian_mod1_mass(0.3, 0.1, 0.45) == doctest::Approx(0.33478306256177479).epsilon(1e-10));
  CHECK(gaussian_mod1_mass(0.3, 0.0, 0.3) == doctest::Approx(0.35115273855345264).epsilon(1e-10));
  CHECK(gaussian_mod1_mass(0.3, 0.2, 0.9) == doctest::Approx(wrapped_gaussian_mass(0.3, 0.2, 0.9)).epsilon(1e-10));
  for (auto [a, b] : {std::pair{0.0, 0.3}, {0.3, 0.7}, {0.2, 0.9}}) {
    CHECK(std::fabs(gaussian_mod1_mass(10.0, a, b) - (b - a)) < 1e-8);
  }
  // Symmetric about 0, so [0, 1/2] carries half the mass at any width.
  CHECK(gaussian_mod1_mass(0.1, 0.0, 0.5) == doctest::Approx(0.5).epsilon(1e-10));
  // A narrow Gaussian is far from uniform on an off-center interval.
  CHECK(gaussian_mod1_mass(0.1, 0.1, 0.6) == doctest::Approx(0.158655).epsilon(1e-4));
  CHECK_THROWS_AS(gaussian_mod1_mass(1.0, 0.5, 0.2), std::domain_error);
  CHECK_THROWS_AS(gaussian_mod1_mass(-1.0, 0.1, 0.2), std::domain_error);
}

TEST_CASE("Benford-good conditions for the Gaussian") {
  const double k1 = 2.0 * std::exp(-2.0 * std::numbers::pi * std::numbers::pi);
  CHECK(condition_char_decay(1.0) < 1e-8);
  CHECK(condition_char_decay(1.0) == doctest::Approx(k1).epsilon(0.01));
  CHECK(condition_char_decay(0.5) > condition_char_decay(1.0));
  CHECK(condition_tail_mass(3.0, 1.959963984540054) == doctest::Approx(0.05).epsilon(1e-10));
  CHECK(condition_tail_mass(1.0, 0.0) == doctest::Approx(1.0));
}
