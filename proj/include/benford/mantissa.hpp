#pragma once

#include <cstdint>
#include <vector>

#include "benford/bignat.hpp"

namespace benford {

/// x = significand * base^exponent with significand in [1, base), or
/// significand == 0 exactly when x == 0.
struct Mantissa {
  double significand = 0.0;
  std::int64_t exponent = 0;
  double base = 10.0;
};

/// Negative inputs use |x|. Throws std::domain_error for non-finite x or base <= 1.
Mantissa mantissa(double x, double base);
Mantissa mantissa(const BigNat& x, double base);

/// log_B|x| mod 1, in [0, 1). Zero is rejected with std::domain_error; callers
/// that want the log_B 0 = 0 convention apply it themselves.
double log_mantissa(double x, double base);
/// Evaluated from the bit length and the top 192 bits at 50 significant
/// digits, so the fractional part is good to far better than 1e-12.
double log_mantissa(const BigNat& x, double base);

/// Leading base-B digit of a BigNat, decided exactly.
///
/// The fast path brackets log_B x from the top 64 bits and the bit length in
/// extended precision; only when the bracket straddles a digit boundary does it
/// fall back to an exact comparison against j * B^e.
class LeadingDigitExtractor {
 public:
  explicit LeadingDigitExtractor(unsigned base);

  [[nodiscard]] unsigned base() const { return base_; }
  /// Leading digit of x * 2^extra_bits (x >= 1).
  [[nodiscard]] unsigned operator()(const BigNat& x, std::uint64_t extra_bits = 0) const;
  /// How many calls had to take the exact path (diagnostics).
  [[nodiscard]] std::uint64_t exact_fallbacks() const { return fallbacks_; }

 private:
  [[nodiscard]] unsigned exact(const BigNat& x, std::uint64_t extra_bits, long double log_estimate) const;

  unsigned base_;
  long double inv_log2_base_;
  std::vector<long double> boundaries_;  // log_B j for j = 1..B
  mutable std::uint64_t fallbacks_ = 0;
};

/// floor(M_B(|x|)). Throws std::domain_error for x == 0 or base < 2.
unsigned leading_digit(double x, unsigned base);
unsigned leading_digit(const BigNat& x, unsigned base);

}  // namespace benford
