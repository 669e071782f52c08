#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "benford/rng.hpp"
#include "benford/stats.hpp"

namespace benford {

using ComplexMatrix = Eigen::MatrixXcd;

/// Thrown when a determinant is exactly singular in working precision.
class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Haar-distributed N x N unitary, 1 <= N <= 512: QR of a complex Ginibre
/// matrix with the phases of diag(R) moved into Q.
ComplexMatrix haar_unitary(int N, RngStream& rng);

/// max |(U* U - I)_ij|.
double unitarity_residual(const ComplexMatrix& U);

/// log |det A| by Gaussian elimination with partial row pivoting, summing the
/// log-magnitudes of the pivots so nothing over- or underflows.
template <typename Derived>
double log_abs_det(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("log_abs_det: matrix must be square");
  double acc = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = 0;
    const double best = a.col(k).tail(n - k).cwiseAbs().maxCoeff(&pivot);
    pivot += k;
    if (!(best > 0.0) || !std::isfinite(best)) throw SingularMatrix("log_abs_det: singular matrix");
    if (pivot != k) a.row(k).swap(a.row(pivot));
    acc += std::log(best);
    if (k + 1 < n) {
      const Scalar inv = Scalar(1) / a(k, k);
      a.col(k).tail(n - k - 1) *= inv;
      a.bottomRightCorner(n - k - 1, n - k - 1).noalias() -=
          a.col(k).tail(n - k - 1) * a.row(k).tail(n - k - 1);
    }
  }
  return acc;
}

/// log |det(I - U e^{-i theta})|.
double log_abs_charpoly(const ComplexMatrix& U, double theta);

/// log N / 2 + (gamma + 1) / 2 + 1 / (24 N^2).
double q2_variance(int N);

struct LogZSample {
  int N = 0;
  double theta = 0.0;
  double log_abs = 0.0;
  double standardized = 0.0;
};

struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double skewness = 0.0;  // of the centered samples
  double kurtosis = 0.0;  // 3 for a Gaussian
};

Moments sample_moments(const std::vector<double>& xs);

struct CueResult {
  int N = 0;
  std::vector<LogZSample> samples;
  DigitHistogram histogram;
  Moments moments;
  double q2 = 0.0;
  std::uint64_t resampled = 0;   // singular or |Z| < 1e-300 draws
  double max_unitarity_residual = 0.0;
};

/// n_samples draws of (U, theta) with U Haar and theta uniform on [0, 2 pi).
/// Samples are generated in fixed blocks, each from its own stream of `seed`,
/// so the result does not depend on `workers`.
CueResult cue_experiment(int N, std::uint64_t n_samples, unsigned base, std::uint64_t seed, int workers = 1);

}  // namespace benford
