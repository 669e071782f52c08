#include "benford/rmt.hpp"

#include <algorithm>
#include <numbers>

#include "benford/parallel.hpp"

namespace benford {

namespace {
constexpr double kEulerGamma = 0.5772156649;
constexpr std::uint64_t kCueBlock = 256;
}  // namespace

ComplexMatrix haar_unitary(int N, RngStream& rng) {
  if (N < 1 || N > 512) throw std::domain_error("haar_unitary: N must lie in [1, 512]");
  const double scale = std::sqrt(0.5);
  for (;;) {
    ComplexMatrix g(N, N);
    for (int j = 0; j < N; ++j) {
      for (int i = 0; i < N; ++i) {
        const double re = rng.normal() * scale;
        const double im = rng.normal() * scale;
        g(i, j) = {re, im};
      }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    const auto diag = r.diagonal();
    if (diag.cwiseAbs().minCoeff() < 1e-12) continue;  // numerically rank deficient; redraw
    ComplexMatrix q = qr.householderQ();
    for (int j = 0; j < N; ++j) q.col(j) *= diag(j) / std::abs(diag(j));
    return q;
  }
}

double unitarity_residual(const ComplexMatrix& U) {
  const ComplexMatrix d = U.adjoint() * U - ComplexMatrix::Identity(U.rows(), U.cols());
  return d.cwiseAbs().maxCoeff();
}

double log_abs_charpoly(const ComplexMatrix& U, double theta) {
  const std::complex<double> phase(std::cos(theta), -std::sin(theta));
  const ComplexMatrix a = ComplexMatrix::Identity(U.rows(), U.cols()) - U * phase;
  return log_abs_det(a);
}

double q2_variance(int N) {
  if (N < 1) throw std::domain_error("q2_variance: N must be >= 1");
  const double n = N;
  return std::log(n) / 2.0 + (kEulerGamma + 1.0) / 2.0 + 1.0 / (24.0 * n * n);
}

Moments sample_moments(const std::vector<double>& xs) {
  Moments m;
  m.n = xs.size();
  if (xs.empty()) return m;
  double sum = 0.0;
  for (double x : xs) sum += x;
  m.mean = sum / static_cast<double>(m.n);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : xs) {
    const double d = x - m.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const double n = static_cast<double>(m.n);
  m2 /= n;
  m3 /= n;
  m4 /= n;
  m.variance = m.n > 1 ? m2 * n / (n - 1.0) : 0.0;
  if (m2 > 0.0) {
    m.skewness = m3 / std::pow(m2, 1.5);
    m.kurtosis = m4 / (m2 * m2);
  }
  return m;
}

CueResult cue_experiment(int N, std::uint64_t n_samples, unsigned base, std::uint64_t seed, int workers) {
  if (N < 2 || N > 512) throw std::domain_error("cue_experiment: N must lie in [2, 512]");
  if (n_samples < 1) throw std::domain_error("cue_experiment: need at least one sample");
  if (base < 2) throw std::domain_error("cue_experiment: base must be >= 2");

  struct Block {
    std::vector<LogZSample> samples;
    DigitHistogram histogram;
    std::uint64_t resampled = 0;
    double residual = 0.0;
  };
  const std::size_t n_blocks = (n_samples + kCueBlock - 1) / kCueBlock;
  std::vector<Block> blocks(n_blocks, Block{{}, DigitHistogram(base), 0, 0.0});
  const double q2 = q2_variance(N);
  const double sd = std::sqrt(q2);
  const double log_base = std::log(static_cast<double>(base));
  const RngStream root(seed);

  parallel_for_blocks(n_blocks, workers, [&](std::size_t b) {
    Block& out = blocks[b];
    RngStream rng = root.split(b);
    const std::uint64_t begin = b * kCueBlock;
    const std::uint64_t end = std::min<std::uint64_t>(n_samples, begin + kCueBlock);
    out.samples.reserve(end - begin);
    for (std::uint64_t i = begin; i < end; ++i) {
      for (;;) {
        const ComplexMatrix U = haar_unitary(N, rng);
        out.residual = std::max(out.residual, unitarity_residual(U));
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        double log_abs = 0.0;
        try {
          log_abs = log_abs_charpoly(U, theta);
        } catch (const SingularMatrix&) {
          ++out.resampled;
          continue;
        }
        if (!std::isfinite(log_abs) || log_abs < std::log(1e-300)) {
          ++out.resampled;
          continue;
        }
        out.samples.push_back({N, theta, log_abs, log_abs / sd});
        // Leading digit of |Z| = B^{frac(log_B |Z|)}.
        double f = log_abs / log_base;
        f -= std::floor(f);
        auto digit = static_cast<unsigned>(std::pow(static_cast<double>(base), f));
        digit = std::clamp(digit, 1u, base - 1);
        out.histogram.add(digit);
        break;
      }
    }
  });

  CueResult result{N, {}, DigitHistogram(base), {}, q2, 0, 0.0};
  result.samples.reserve(n_samples);
  for (const auto& block : blocks) {
    result.samples.insert(result.samples.end(), block.samples.begin(), block.samples.end());
    result.histogram.merge(block.histogram);
    result.resampled += block.resampled;
    result.max_unitarity_residual = std::max(result.max_unitarity_residual, block.residual);
  }
  std::vector<double> logs;
  logs.reserve(result.samples.size());
  for (const auto& s : result.samples) logs.push_back(s.log_abs);
  result.moments = sample_moments(logs);
  return result;
}

}  // namespace benford
