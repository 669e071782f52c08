#include "benford/mantissa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "benford/highprec.hpp"

namespace benford {

namespace {

void check_base(double base) {
  if (!(base > 1.0) || !std::isfinite(base)) throw std::domain_error("base must be a finite real > 1");
}

}  // namespace

Mantissa mantissa(double x, double base) {
  check_base(base);
  if (!std::isfinite(x)) throw std::domain_error("mantissa: non-finite input");
  if (x == 0.0) return {0.0, 0, base};
  const long double ax = std::fabs(static_cast<long double>(x));
  const long double lb = std::log(static_cast<long double>(base));
  auto k = static_cast<std::int64_t>(std::floor(std::log(ax) / lb));
  long double sig = ax / std::pow(static_cast<long double>(base), static_cast<long double>(k));
  if (sig >= base) {
    sig /= base;
    ++k;
  } else if (sig < 1.0L) {
    sig *= base;
    --k;
  }
  // Rounding to double may land exactly on base.
  double out = static_cast<double>(sig);
  if (out >= base) {
    out = std::nextafter(base, 0.0);
  }
  return {std::max(out, 1.0), k, base};
}

Mantissa mantissa(const BigNat& x, double base) {
  check_base(base);
  if (x.is_zero()) return {0.0, 0, base};
  const Prec50 log_base = log(Prec50(base));
  const Prec50 value = ln(x) / log_base;
  const Prec50 whole = floor(value);
  const Prec50 frac = value - whole;
  double sig = exp(frac * log_base).convert_to<double>();
  sig = std::clamp(sig, 1.0, std::nextafter(base, 0.0));
  return {sig, whole.convert_to<std::int64_t>(), base};
}

double log_mantissa(double x, double base) {
  if (x == 0.0) throw std::domain_error("log_mantissa: zero has no mantissa");
  const Mantissa m = mantissa(x, base);
  const double f = static_cast<double>(std::log(static_cast<long double>(m.significand)) /
                                       std::log(static_cast<long double>(base)));
  return f >= 1.0 ? 0.0 : f;
}

double log_mantissa(const BigNat& x, double base) {
  check_base(base);
  if (x.is_zero()) throw std::domain_error("log_mantissa: zero has no mantissa");
  const Prec50 value = ln(x) / log(Prec50(base));
  const double f = Prec50(value - floor(value)).convert_to<double>();
  return f >= 1.0 ? 0.0 : f;
}

LeadingDigitExtractor::LeadingDigitExtractor(unsigned base) : base_(base) {
  if (base < 2) throw std::domain_error("leading digit base must be an integer >= 2");
  inv_log2_base_ = 1.0L / std::log2(static_cast<long double>(base));
  boundaries_.resize(base);
  for (unsigned j = 1; j <= base; ++j) {
    boundaries_[j - 1] = std::log2(static_cast<long double>(j)) * inv_log2_base_;
  }
  boundaries_.front() = 0.0L;
  boundaries_.back() = 1.0L;
}

unsigned LeadingDigitExtractor::operator()(const BigNat& x, std::uint64_t extra_bits) const {
  if (x.is_zero()) throw std::domain_error("leading_digit: zero has no leading digit");
  if (x.bit_length() + extra_bits <= 64) {
    std::uint64_t v = x.to_u64() << extra_bits;
    while (v >= base_) v /= base_;
    return static_cast<unsigned>(v);
  }
  const auto [top, shift] = x.top_bits();
  const long double lx =
      (std::log2(static_cast<long double>(top)) + static_cast<long double>(shift + extra_bits)) *
      inv_log2_base_;
  // Generous bracket: long double carries ~19 digits, so 1e-13 absolute plus a
  // term growing with the magnitude of log_B x covers every rounding step and
  // the truncation of x to its top 64 bits.
  const long double err = 1e-13L + std::fabs(lx) * 1e-17L;
  const long double f = lx - std::floor(lx);
  const auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), f);
  const auto digit = static_cast<unsigned>(it - boundaries_.begin());
  const long double below = f - boundaries_[digit - 1];
  const long double above = boundaries_[std::min<std::size_t>(digit, base_ - 1)] - f;
  if (below < err || above < err) return exact(x, extra_bits, lx);
  return digit;
}

unsigned LeadingDigitExtractor::exact(const BigNat& x, std::uint64_t extra_bits,
                                      long double log_estimate) const {
  ++fallbacks_;
  const BigNat value = x << extra_bits;
  auto e = static_cast<std::int64_t>(std::floor(log_estimate));
  e = std::max<std::int64_t>(e, 0);
  BigNat power = BigNat::pow(base_, static_cast<std::uint64_t>(e));
  while (power > value) {
    power.divmod_small_inplace(base_);
  }
  for (;;) {
    BigNat next = power;
    next.mul_small_inplace(base_);
    if (next > value) break;
    power = std::move(next);
  }
  unsigned digit = 1;
  for (unsigned j = 2; j < base_; ++j) {
    BigNat candidate = power;
    candidate.mul_small_inplace(j);
    if (candidate > value) break;
    digit = j;
  }
  return digit;
}

unsigned leading_digit(double x, unsigned base) {
  if (base < 2) throw std::domain_error("leading digit base must be an integer >= 2");
  if (x == 0.0) throw std::domain_error("leading_digit: zero has no leading digit");
  const Mantissa m = mantissa(x, static_cast<double>(base));
  return std::clamp(static_cast<unsigned>(m.significand), 1U, base - 1);
}

unsigned leading_digit(const BigNat& x, unsigned base) { return LeadingDigitExtractor(base)(x); }

}  // namespace benford
