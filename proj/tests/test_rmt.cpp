#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "benford/rmt.hpp"
#include "charpoly_oracle.hpp"

using namespace benford;
using cplx = std::complex<double>;

namespace {

cplx det3(const ComplexMatrix& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

TEST_CASE("Haar unitaries are unitary") {
  RngStream rng(1);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) worst = std::max(worst, unitarity_residual(haar_unitary(50, rng)));
  CHECK(worst < 1e-10);
  CHECK_THROWS_AS(haar_unitary(0, rng), std::domain_error);
  CHECK_THROWS_AS(haar_unitary(513, rng), std::domain_error);
}

TEST_CASE("N = 1 is a uniform phase") {
  RngStream rng(2);
  cplx mean = 0.0;
  const int n = 20000;
  int upper_half = 0;
  for (int i = 0; i < n; ++i) {
    const cplx u = haar_unitary(1, rng)(0, 0);
    CHECK(std::abs(u) == doctest::Approx(1.0).epsilon(1e-14));
    mean += u;
    upper_half += u.imag() > 0.0;
  }
  CHECK(std::abs(mean / static_cast<double>(n)) < 4.0 / std::sqrt(n));
  CHECK(std::abs(upper_half - n / 2) < 4.0 * std::sqrt(n / 4.0));
}

TEST_CASE("trace moments at N = 20") {
  RngStream rng(3);
  const int n = 10000;
  cplx sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx tr = haar_unitary(20, rng).trace();
    sum += tr;
    sq += std::norm(tr);
  }
  // |Tr U|^2 is close to Exp(1): mean 1, variance 1.
  CHECK(std::abs(sum / static_cast<double>(n)) < 5.0 / std::sqrt(n));
  CHECK(std::fabs(sq / n - 1.0) < 5.0 / std::sqrt(n));
}

TEST_CASE("elimination determinant against closed forms") {
  RngStream rng(4);
  for (int i = 0; i < 50; ++i) {
    ComplexMatrix a(3, 3);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a(r, c) = {rng.normal(), rng.normal()};
    }
    CHECK(log_abs_det(a) == doctest::Approx(std::log(std::abs(det3(a)))).epsilon(1e-10));
    CHECK(log_abs_det(a) == doctest::Approx(std::log(std::abs(a.partialPivLu().determinant()))).epsilon(1e-10));
  }
  // 10^400 overflows a double but not its logarithm.
  const ComplexMatrix big = 10.0 * ComplexMatrix::Identity(400, 400);
  CHECK(log_abs_det(big) == doctest::Approx(400.0 * std::log(10.0)).epsilon(1e-12));
  Eigen::MatrixXd real(2, 2);
  real << 0.0, 2.0, 3.0, 1.0;
  CHECK(log_abs_det(real) == doctest::Approx(std::log(6.0)));
  ComplexMatrix singular = ComplexMatrix::Ones(4, 4);
  CHECK_THROWS_AS(log_abs_det(singular), SingularMatrix);
}

TEST_CASE("characteristic polynomial at N = 1") {
  for (double alpha : {0.3, 2.0, -1.1}) {
    ComplexMatrix u(1, 1);
    u(0, 0) = std::polar(1.0, alpha);
    for (double theta : {0.0, 1.0, 4.0}) {
      CHECK(log_abs_charpoly(u, theta) ==
            doctest::Approx(std::log(2.0 * std::fabs(std::sin((alpha - theta) / 2.0)))).epsilon(1e-13));
    }
  }
}

TEST_CASE("small-N determinant oracle: eigenangles from polynomial roots") {
  RngStream rng(5);
  for (int N = 2; N <= 8; ++N) {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix u = haar_unitary(N, rng);
      const auto eig = oracle::roots(oracle::charpoly(u));
      for (const cplx& z : eig) CHECK(std::abs(z) == doctest::Approx(1.0).epsilon(1e-9));
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      CHECK(std::fabs(log_abs_charpoly(u, theta) - oracle::log_abs_charpoly(u, theta)) < 1e-8);
    }
  }
}

TEST_CASE("Q2 variance") {
  CHECK(q2_variance(1) == doctest::Approx(0.83027).epsilon(1e-5));
  CHECK(q2_variance(10) == doctest::Approx(1.94032).epsilon(1e-5));
  CHECK(q2_variance(64) == doctest::Approx(2.86806).epsilon(1e-5));
  CHECK(q2_variance(2000) - q2_variance(1000) == doctest::Approx(std::log(2.0) / 2.0).epsilon(1e-6));
  CHECK_THROWS_AS(q2_variance(0), std::domain_error);
}

TEST_CASE("sample moments") {
  const Moments m = sample_moments({1.0, 2.0, 3.0, 4.0});
  CHECK(m.mean == doctest::Approx(2.5));
  CHECK(m.variance == doctest::Approx(5.0 / 3.0));
  CHECK(m.skewness == doctest::Approx(0.0));
  CHECK(m.kurtosis == doctest::Approx(1.64));
  CHECK(sample_moments({}).n == 0);
}

TEST_CASE("log |Z| is centered whatever theta is") {
  RngStream rng(6);
  const int n = 4000;
  const double sd = std::sqrt(q2_variance(8));
  for (double theta : {0.0, 1.3}) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += log_abs_charpoly(haar_unitary(8, rng), theta);
    CHECK(std::fabs(sum / n) < 4.0 * sd / std::sqrt(n));
  }
}

TEST_CASE("CUE experiment is worker-invariant and well formed") {
  const CueResult a = cue_experiment(6, 1500, 10, 77, 1);
  const CueResult b = cue_experiment(6, 1500, 10, 77, 4);
  CHECK(a.samples.size() == 1500);
  CHECK(a.histogram == b.histogram);
  CHECK(a.moments.variance == b.moments.variance);
  bool same = true;
  for (std::size_t i = 0; i < a.samples.size(); ++i) same = same && a.samples[i].log_abs == b.samples[i].log_abs;
  CHECK(same);
  CHECK(a.max_unitarity_residual < 1e-10);
  for (const auto& s : a.samples) CHECK(s.standardized == doctest::Approx(s.log_abs / std::sqrt(a.q2)));
  CHECK(cue_experiment(6, 1500, 10, 78, 1).histogram != a.histogram);
  CHECK_THROWS_AS(cue_experiment(1, 10, 10, 1), std::domain_error);
  CHECK_THROWS_AS(cue_experiment(4, 0, 10, 1), std::domain_error);
}
