#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace benford {

class RngStream;

/// Arbitrary-precision natural number.
///
/// Limbs are 64-bit and little-endian. The representation is canonical: the
/// most significant limb is never zero, and zero is the empty limb vector.
/// All arithmetic is exact.
class BigNat {
 public:
  using Limb = std::uint64_t;

  BigNat() = default;
  BigNat(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  static BigNat from_limbs(std::vector<Limb> limbs);
  /// Parses a string of decimal digits. Throws std::invalid_argument.
  static BigNat from_decimal(std::string_view digits);
  static BigNat pow(std::uint64_t base, std::uint64_t exponent);

  [[nodiscard]] std::string to_decimal() const;
  [[nodiscard]] std::span<const Limb> limbs() const { return limbs_; }

  [[nodiscard]] bool is_zero() const { return limbs_.empty(); }
  [[nodiscard]] bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1U); }
  [[nodiscard]] std::uint64_t bit_length() const;
  [[nodiscard]] std::uint64_t trailing_zero_bits() const;
  /// Value as u64; precondition bit_length() <= 64.
  [[nodiscard]] std::uint64_t to_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }
  [[nodiscard]] bool fits_u64() const { return limbs_.size() <= 1; }

  /// Returns the 64 most significant bits (left-aligned, top bit set) and the
  /// number of bits dropped below them, so that
  /// top * 2^shift <= *this < (top + 1) * 2^shift.
  /// For values below 2^64 the top word is the value itself and shift is 0.
  [[nodiscard]] std::pair<std::uint64_t, std::uint64_t> top_bits() const;

  [[nodiscard]] std::uint64_t mod_small(std::uint64_t divisor) const;

  // In-place kernels used by the iteration hot loops.
  void mul_small_inplace(std::uint64_t factor);
  void add_small_inplace(std::uint64_t addend);
  /// Throws std::domain_error on underflow.
  void sub_small_inplace(std::uint64_t subtrahend);
  /// Divides in place and returns the remainder.
  std::uint64_t divmod_small_inplace(std::uint64_t divisor);
  void shift_right_inplace(std::uint64_t bits);
  void shift_left_inplace(std::uint64_t bits);

  friend BigNat operator+(const BigNat& a, const BigNat& b);
  friend BigNat operator*(const BigNat& a, const BigNat& b);
  friend BigNat operator<<(BigNat a, std::uint64_t bits) {
    a.shift_left_inplace(bits);
    return a;
  }
  friend BigNat operator>>(BigNat a, std::uint64_t bits) {
    a.shift_right_inplace(bits);
    return a;
  }

  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);
  friend bool operator==(const BigNat& a, const BigNat& b) = default;

 private:
  void trim();

  std::vector<Limb> limbs_;
};

/// Exact g*x + h. Throws std::domain_error when the result would be negative.
BigNat mul_add_small(const BigNat& x, std::uint64_t g, std::int64_t h);

struct FactorSplit {
  BigNat cofactor;
  std::uint64_t exponent = 0;
};

/// Splits x = cofactor * d^exponent with d not dividing cofactor.
/// Throws std::domain_error for x == 0 or d < 2.
FactorSplit shift_out_factor(BigNat x, std::uint64_t d);

/// Uniform leading digit in [1, base-1], remaining digits uniform in
/// [0, base-1]. Deterministic for a given stream state.
BigNat random_bignat(std::size_t num_digits, std::uint32_t base, RngStream& rng);

}  // namespace benford
