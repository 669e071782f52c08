#include "benford/zeta.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/bernoulli.hpp>

#include "benford/mantissa.hpp"
#include "benford/parallel.hpp"

namespace benford {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// n^{-s} = n^{-sigma} e^{-i t log n}
cplx inverse_power(double n, cplx s) {
  const double log_n = std::log(n);
  const double magnitude = std::exp(-s.real() * log_n);
  const double phase = -s.imag() * log_n;
  return {magnitude * std::cos(phase), magnitude * std::sin(phase)};
}

void check_region(cplx s) {
  if (s == cplx(1.0, 0.0)) throw std::domain_error("zeta: pole at s = 1");
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw std::domain_error("zeta: non-finite argument");
  if (s.real() < 0.0) throw std::runtime_error("zeta: Re(s) < 0 is outside the certified region");
  if (std::fabs(s.imag()) > 1e5) throw std::runtime_error("zeta: |Im(s)| > 1e5 is outside the certified region");
}

}  // namespace

ZetaValue zeta_eta_series(cplx s) {
  check_region(s);
  const double t = std::fabs(s.imag());
  const cplx factor = 1.0 - std::pow(cplx(2.0, 0.0), 1.0 - s);
  const double factor_abs = std::abs(factor);
  if (factor_abs < 1e-3) throw std::runtime_error("zeta_eta_series: 1 - 2^(1-s) too close to zero");

  const double rate = std::log(3.0 + std::sqrt(8.0));
  const double growth = std::log(3.0 * (1.0 + 2.0 * t)) + kPi * t / 2.0;
  const int n = static_cast<int>(std::ceil((growth + 17.0 * std::log(10.0) + std::log(1.0 / factor_abs)) / rate));

  std::vector<double> d(static_cast<std::size_t>(n) + 1);
  double term = 1.0;
  double acc = 1.0;
  d[0] = acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
    acc += term;
    d[static_cast<std::size_t>(i)] = acc;
  }
  const double dn = d[static_cast<std::size_t>(n)];
  cplx sum = 0.0;
  double magnitude = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const cplx contribution = (d[static_cast<std::size_t>(k)] - dn) * inverse_power(k + 1.0, s);
    sum += (k % 2 == 0) ? contribution : -contribution;
    magnitude += std::abs(contribution);
  }
  const cplx value = -sum / (dn * factor);
  const double truncation = 3.0 * (1.0 + 2.0 * t) * std::exp(kPi * t / 2.0 - n * rate) / factor_abs;
  // Each term carries a phase error of about t log(k+1) ulps.
  const double rounding =
      8.0 * kEps * (1.0 + t * std::log(n + 1.0)) * magnitude / (dn * factor_abs) + 4.0 * kEps * std::abs(value);
  return {value, truncation + rounding, ZetaMethod::eta_series};
}

ZetaValue zeta_euler_maclaurin(cplx s) {
  check_region(s);
  const double sigma = s.real();
  const double abs_s = std::abs(s);
  const auto N = static_cast<int>(std::max(20.0, std::ceil(abs_s / kPi) + 10.0));

  cplx head = 0.0;
  double head_magnitude = 0.0;
  for (int n = N - 1; n >= 1; --n) {
    const cplx term = inverse_power(n, s);
    head += term;
    head_magnitude += std::abs(term);
  }
  const cplx n_pow = inverse_power(N, s);  // N^{-s}
  const double Nd = N;
  cplx value = head + n_pow * Nd / (s - 1.0) + 0.5 * n_pow;

  // Bernoulli corrections B_2j / (2j)! * s (s+1) ... (s+2j-2) N^{-s-2j+1}.
  cplx rising = s;  // s (s+1) ... (s + 2j - 2)
  double factorial = 2.0;
  cplx power = n_pow / Nd;  // N^{-s-1}
  double error = std::numeric_limits<double>::infinity();
  constexpr int kMaxTerms = 30;
  for (int j = 1; j <= kMaxTerms; ++j) {
    const cplx term = boost::math::bernoulli_b2n<double>(j) / factorial * rising * power;
    // Next term bounds the remainder, scaled as in the classical estimate.
    const cplx next_rising = rising * (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    const double next_factorial = factorial * (2.0 * j + 1.0) * (2.0 * j + 2.0);
    const cplx next_term =
        boost::math::bernoulli_b2n<double>(j + 1) / next_factorial * next_rising * power / (Nd * Nd);
    value += term;
    const double bound = std::abs(next_term) * std::abs(s + (2.0 * j + 1.0)) / (sigma + 2.0 * j + 1.0);
    rising = next_rising;
    factorial = next_factorial;
    power /= Nd * Nd;
    if (bound < 1e-17 * std::max(1.0, std::abs(value)) || j == kMaxTerms) {
      error = bound;
      break;
    }
  }
  const double t = std::fabs(s.imag());
  // Phase errors of ~t log N ulps per term add like a random walk.
  const double rounding = 4.0 * kEps * (1.0 + t * std::log(Nd)) * std::sqrt(head_magnitude * 2.0) +
                          8.0 * kEps * std::abs(value);
  return {value, error + rounding, ZetaMethod::euler_maclaurin};
}

double riemann_siegel_theta(double t) {
  if (t < 10.0) throw std::domain_error("riemann_siegel_theta: asymptotic series needs t >= 10");
  const double t2 = t * t;
  return t / 2.0 * std::log(t / (2.0 * kPi)) - t / 2.0 - kPi / 8.0 +
         (1.0 / 48.0 + (7.0 / 5760.0 + (31.0 / 80640.0 + 127.0 / 430080.0 / t2) / t2) / t2) / t;
}

namespace {

// Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) is entire; its derivatives
// come from the Cauchy integral on a circle around p, where the formula is
// well conditioned.
std::array<double, 13> psi_derivatives(double p) {
  constexpr int kNodes = 64;
  constexpr double kRadius = 0.5;
  std::array<cplx, 13> acc{};
  for (int j = 0; j < kNodes; ++j) {
    const double phi = 2.0 * kPi * (j + 0.5) / kNodes;
    const cplx unit(std::cos(phi), std::sin(phi));
    const cplx z = p + kRadius * unit;
    const cplx psi = std::cos(2.0 * kPi * (z * z - z - 1.0 / 16.0)) / std::cos(2.0 * kPi * z);
    cplx rotation = 1.0;
    const cplx step = std::conj(unit);
    for (int k = 0; k <= 12; ++k) {
      acc[static_cast<std::size_t>(k)] += psi * rotation;
      rotation *= step;
    }
  }
  std::array<double, 13> out{};
  double scale = 1.0 / kNodes;  // k! / (M r^k)
  for (int k = 0; k <= 12; ++k) {
    if (k > 0) scale *= k / kRadius;
    out[static_cast<std::size_t>(k)] = (acc[static_cast<std::size_t>(k)] * scale).real();
  }
  return out;
}

}  // namespace

RiemannSiegelZ riemann_siegel_z(double t) {
  if (t < 10.0) throw std::domain_error("riemann_siegel_z: needs t >= 10");
  const double tau = std::sqrt(t / (2.0 * kPi));
  const auto N = static_cast<int>(std::floor(tau));
  const double p = tau - N;
  const double theta = riemann_siegel_theta(t);

  double main = 0.0;
  for (int n = N; n >= 1; --n) {
    main += std::cos(theta - t * std::log(static_cast<double>(n))) / std::sqrt(static_cast<double>(n));
  }
  main *= 2.0;

  const auto d = psi_derivatives(p);
  const double pi2 = kPi * kPi;
  const double pi4 = pi2 * pi2;
  const double pi6 = pi4 * pi2;
  const double pi8 = pi4 * pi4;
  const std::array<double, 5> c = {
      d[0],
      -d[3] / (96.0 * pi2),
      d[6] / (18432.0 * pi4) + d[2] / (64.0 * pi2),
      -d[9] / (5308416.0 * pi6) - d[5] / (3840.0 * pi4) - d[1] / (64.0 * pi2),
      d[12] / (2038431744.0 * pi8) + 11.0 * d[8] / (5898240.0 * pi6) + 19.0 * d[4] / (24576.0 * pi4) +
          d[0] / (128.0 * pi2),
  };
  const double a = std::sqrt(2.0 * kPi / t);
  double correction = 0.0;
  double power = 1.0;
  for (double ck : c) {
    correction += ck * power;
    power *= a;
  }
  const double sign = (N - 1) % 2 == 0 ? 1.0 : -1.0;
  const double z = main + sign * std::sqrt(a) * correction;
  // Remainder after C4 is O(t^{-11/4}); the constant is calibrated against
  // Euler-Maclaurin with a wide margin. Rounding: each cosine argument is
  // ~theta in size.
  const double truncation = 0.04 * std::pow(t, -2.75);
  const double rounding = 4.0 * kEps * theta * 2.0 * std::sqrt(static_cast<double>(N)) + 8.0 * kEps;
  return {z, truncation + rounding};
}

ZetaValue zeta_riemann_siegel(double t) {
  const RiemannSiegelZ rs = riemann_siegel_z(t);
  const double theta = riemann_siegel_theta(t);
  const cplx value = rs.z * cplx(std::cos(theta), -std::sin(theta));
  return {value, rs.error + 4.0 * kEps * theta * std::fabs(rs.z), ZetaMethod::riemann_siegel};
}

ZetaValue zeta(cplx s) {
  check_region(s);
  if (s.imag() < 0.0) {
    ZetaValue v = zeta(std::conj(s));
    v.value = std::conj(v.value);
    return v;
  }
  const double t = s.imag();
  if (t <= 40.0) {
    const double factor = std::abs(1.0 - std::pow(cplx(2.0, 0.0), 1.0 - s));
    if (factor >= 0.05) return zeta_eta_series(s);
    return zeta_euler_maclaurin(s);
  }
  if (s.real() == 0.5 && t >= 200.0) return zeta_riemann_siegel(t);
  return zeta_euler_maclaurin(s);
}

double sigma_T(double T, double delta) {
  if (!(T > std::numbers::e)) throw std::domain_error("sigma_T: T must exceed e");
  if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("sigma_T: delta must lie in (0, 1)");
  return 0.5 + std::pow(std::log(T), -delta);
}

double psi_variance(double sigma, double T, double aleph) {
  if (!(sigma > 0.5)) throw std::domain_error("psi_variance: sigma must exceed 1/2");
  if (!(T > std::numbers::e)) throw std::domain_error("psi_variance: T must exceed e");
  return aleph * std::log(std::min(std::log(T), 1.0 / (sigma - 0.5)));
}

namespace {

struct ScanBlock {
  std::vector<ZetaSample> samples;
  DigitHistogram histogram;
  std::uint64_t near_zero = 0;
  std::uint64_t ambiguous = 0;
  std::uint64_t failures = 0;
};

// Digit of |zeta| if the whole band [abs - err, abs + err] agrees, else 0.
unsigned certified_digit(double abs, double err, unsigned base) {
  const unsigned lo = leading_digit(abs - err, base);
  const unsigned hi = leading_digit(abs + err, base);
  if (lo != hi) return 0;
  // The band may still wrap a power of the base (e.g. 0.9999.. to 1.0000..).
  const Mantissa m_lo = mantissa(abs - err, base);
  const Mantissa m_hi = mantissa(abs + err, base);
  return m_lo.exponent == m_hi.exponent ? lo : 0;
}

}  // namespace

ZetaScan scan_line(double t_start, double t_end, double step, const SigmaMode& mode, unsigned base, int workers) {
  if (!(step > 0.0)) throw std::domain_error("scan_line: step must be > 0");
  ZetaScan scan{{}, DigitHistogram(base), 0, 0, 0};
  if (t_end < t_start) return scan;
  const auto points = static_cast<std::size_t>(std::floor((t_end - t_start) / step + 1e-9)) + 1;
  constexpr std::size_t kBlock = 1024;
  const std::size_t n_blocks = (points + kBlock - 1) / kBlock;
  std::vector<ScanBlock> blocks(n_blocks, ScanBlock{{}, DigitHistogram(base), 0, 0, 0});

  parallel_for_blocks(n_blocks, workers, [&](std::size_t b) {
    ScanBlock& out = blocks[b];
    const std::size_t end = std::min(points, (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) {
      ZetaSample sample;
      sample.t = t_start + static_cast<double>(i) * step;
      try {
        sample.sigma = mode.kind == SigmaMode::Kind::fixed ? mode.sigma : sigma_T(sample.t, mode.delta);
        ZetaValue v = zeta({sample.sigma, sample.t});
        sample.value = v.value;
        sample.abs = std::abs(v.value);
        sample.log_abs = std::log(sample.abs);
        sample.cert_err = v.error;
        if (sample.abs < 10.0 * v.error) {
          ++out.near_zero;
        } else {
          unsigned digit = certified_digit(sample.abs, v.error, base);
          if (digit == 0 && v.method != ZetaMethod::euler_maclaurin) {
            v = zeta_euler_maclaurin({sample.sigma, sample.t});
            sample.value = v.value;
            sample.abs = std::abs(v.value);
            sample.log_abs = std::log(sample.abs);
            sample.cert_err = v.error;
            digit = certified_digit(sample.abs, v.error, base);
          }
          if (digit == 0) {
            ++out.ambiguous;
          } else {
            sample.leading_digit = digit;
            out.histogram.add(digit);
          }
        }
      } catch (const std::exception&) {
        ++out.failures;
      }
      out.samples.push_back(sample);
    }
  });

  scan.samples.reserve(points);
  for (auto& block : blocks) {
    scan.samples.insert(scan.samples.end(), block.samples.begin(), block.samples.end());
    scan.histogram.merge(block.histogram);
    scan.near_zero += block.near_zero;
    scan.ambiguous += block.ambiguous;
    scan.failures += block.failures;
  }
  return scan;
}

}  // namespace benford
