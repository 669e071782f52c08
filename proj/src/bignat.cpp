#include "benford/bignat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "benford/rng.hpp"

namespace benford {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kDecimalChunk = 10'000'000'000'000'000'000ULL;  // 10^19
constexpr int kDecimalChunkDigits = 19;

}  // namespace

BigNat::BigNat(std::uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

BigNat BigNat::from_limbs(std::vector<Limb> limbs) {
  BigNat out;
  out.limbs_ = std::move(limbs);
  out.trim();
  return out;
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::from_decimal(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty decimal string");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("non-digit character in decimal string");
  }
  BigNat out;
  out.limbs_.reserve(digits.size() / 19 + 1);
  std::size_t pos = 0;
  const std::size_t head = digits.size() % kDecimalChunkDigits;
  auto absorb = [&](std::size_t len) {
    std::uint64_t chunk = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < len; ++i) {
      chunk = chunk * 10 + static_cast<std::uint64_t>(digits[pos + i] - '0');
      scale *= 10;
    }
    pos += len;
    out.mul_small_inplace(scale);
    out.add_small_inplace(chunk);
  };
  if (head != 0) absorb(head);
  while (pos < digits.size()) absorb(kDecimalChunkDigits);
  return out;
}

std::string BigNat::to_decimal() const {
  if (is_zero()) return "0";
  BigNat work = *this;
  std::vector<std::uint64_t> chunks;
  while (!work.is_zero()) chunks.push_back(work.divmod_small_inplace(kDecimalChunk));
  std::string out = std::to_string(chunks.back());
  for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
    const std::string part = std::to_string(*it);
    out.append(kDecimalChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

BigNat BigNat::pow(std::uint64_t base, std::uint64_t exponent) {
  BigNat result(1);
  BigNat square(base);
  while (exponent != 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1;
    if (exponent != 0) square = square * square;
  }
  return result;
}

std::uint64_t BigNat::bit_length() const {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) + (64 - static_cast<std::uint64_t>(std::countl_zero(limbs_.back())));
}

std::uint64_t BigNat::trailing_zero_bits() const {
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if (limbs_[i] != 0) return 64 * i + static_cast<std::uint64_t>(std::countr_zero(limbs_[i]));
  }
  return 0;
}

std::pair<std::uint64_t, std::uint64_t> BigNat::top_bits() const {
  const std::uint64_t bits = bit_length();
  if (bits <= 64) return {to_u64(), 0};
  const std::uint64_t shift = bits - 64;
  const std::size_t limb = shift / 64;
  const unsigned offset = static_cast<unsigned>(shift % 64);
  std::uint64_t top = limbs_[limb] >> offset;
  if (offset != 0) top |= limbs_[limb + 1] << (64 - offset);
  return {top, shift};
}

std::uint64_t BigNat::mod_small(std::uint64_t divisor) const {
  if (divisor == 0) throw std::domain_error("division by zero");
  u128 rem = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
    rem = ((rem << 64) | *it) % divisor;
  }
  return static_cast<std::uint64_t>(rem);
}

void BigNat::mul_small_inplace(std::uint64_t factor) {
  if (factor == 0) {
    limbs_.clear();
    return;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    const u128 product = static_cast<u128>(limb) * factor + carry;
    limb = static_cast<std::uint64_t>(product);
    carry = static_cast<std::uint64_t>(product >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
}

void BigNat::add_small_inplace(std::uint64_t addend) {
  for (auto& limb : limbs_) {
    if (addend == 0) return;
    limb += addend;
    addend = limb < addend ? 1 : 0;
  }
  if (addend != 0) limbs_.push_back(addend);
}

void BigNat::sub_small_inplace(std::uint64_t subtrahend) {
  if (*this < BigNat(subtrahend)) throw std::domain_error("BigNat subtraction underflow");
  for (auto& limb : limbs_) {
    if (subtrahend == 0) break;
    const std::uint64_t before = limb;
    limb -= subtrahend;
    subtrahend = before < subtrahend ? 1 : 0;
  }
  trim();
}

std::uint64_t BigNat::divmod_small_inplace(std::uint64_t divisor) {
  if (divisor == 0) throw std::domain_error("division by zero");
  u128 rem = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
    const u128 cur = (rem << 64) | *it;
    *it = static_cast<std::uint64_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint64_t>(rem);
}

void BigNat::shift_right_inplace(std::uint64_t bits) {
  const std::size_t whole = bits / 64;
  if (whole >= limbs_.size()) {
    limbs_.clear();
    return;
  }
  const unsigned offset = static_cast<unsigned>(bits % 64);
  const std::size_t n = limbs_.size() - whole;
  if (offset == 0) {
    std::move(limbs_.begin() + static_cast<std::ptrdiff_t>(whole), limbs_.end(), limbs_.begin());
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t v = limbs_[i + whole] >> offset;
      if (i + whole + 1 < limbs_.size()) v |= limbs_[i + whole + 1] << (64 - offset);
      limbs_[i] = v;
    }
  }
  limbs_.resize(n);
  trim();
}

void BigNat::shift_left_inplace(std::uint64_t bits) {
  if (is_zero()) return;
  const std::size_t whole = bits / 64;
  const unsigned offset = static_cast<unsigned>(bits % 64);
  if (offset != 0) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      const std::uint64_t next = limb >> (64 - offset);
      limb = (limb << offset) | carry;
      carry = next;
    }
    if (carry != 0) limbs_.push_back(carry);
  }
  limbs_.insert(limbs_.begin(), whole, 0);
}

BigNat operator+(const BigNat& a, const BigNat& b) {
  const auto& big = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
  const auto& small = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
  BigNat out;
  out.limbs_.resize(big.size());
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    const u128 sum = static_cast<u128>(big[i]) + (i < small.size() ? small[i] : 0) + carry;
    out.limbs_[i] = static_cast<std::uint64_t>(sum);
    carry = static_cast<std::uint64_t>(sum >> 64);
  }
  if (carry != 0) out.limbs_.push_back(carry);
  return out;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  BigNat out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    const u128 ai = a.limbs_[i];
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      const u128 cur = ai * b.limbs_[j] + out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint64_t>(cur);
      carry = static_cast<std::uint64_t>(cur >> 64);
    }
    out.limbs_[i + b.limbs_.size()] = carry;
  }
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

BigNat mul_add_small(const BigNat& x, std::uint64_t g, std::int64_t h) {
  BigNat out = x;
  out.mul_small_inplace(g);
  if (h >= 0) {
    out.add_small_inplace(static_cast<std::uint64_t>(h));
  } else {
    const auto magnitude = static_cast<std::uint64_t>(-(h + 1)) + 1;
    if (out < BigNat(magnitude)) throw std::domain_error("mul_add_small: negative result");
    out.sub_small_inplace(magnitude);
  }
  return out;
}

FactorSplit shift_out_factor(BigNat x, std::uint64_t d) {
  if (d < 2) throw std::domain_error("shift_out_factor: d must be >= 2");
  if (x.is_zero()) throw std::domain_error("shift_out_factor: x must be >= 1");
  FactorSplit out;
  if (std::has_single_bit(d)) {
    const auto log2d = static_cast<std::uint64_t>(std::countr_zero(d));
    const std::uint64_t k = x.trailing_zero_bits() / log2d;
    x.shift_right_inplace(k * log2d);
    out.exponent = k;
  } else {
    while (x.mod_small(d) == 0) {
      x.divmod_small_inplace(d);
      ++out.exponent;
    }
  }
  out.cofactor = std::move(x);
  return out;
}

BigNat random_bignat(std::size_t num_digits, std::uint32_t base, RngStream& rng) {
  if (num_digits == 0) throw std::domain_error("random_bignat: num_digits must be >= 1");
  if (base < 2) throw std::domain_error("random_bignat: base must be >= 2");
  // Pack as many base-B digits per chunk as fit below 2^64.
  std::uint64_t chunk_scale = base;
  std::size_t chunk_digits = 1;
  while (chunk_scale <= (~std::uint64_t{0}) / base) {
    chunk_scale *= base;
    ++chunk_digits;
  }
  BigNat out(1 + rng.uniform_int(base - 1));
  std::size_t remaining = num_digits - 1;
  while (remaining != 0) {
    const std::size_t take = std::min(remaining, chunk_digits);
    std::uint64_t chunk = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < take; ++i) {
      chunk = chunk * base + rng.uniform_int(base);
      scale *= base;
    }
    out.mul_small_inplace(scale);
    out.add_small_inplace(chunk);
    remaining -= take;
  }
  return out;
}

}  // namespace benford
