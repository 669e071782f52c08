#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace benford {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3").
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Counter-based random stream. A stream is identified by (seed, stream id);
/// two streams with different ids never share a counter value, so splitting is
/// free and reproducible regardless of which thread consumes which stream.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  /// Independent child stream; the child depends only on (seed, id).
  [[nodiscard]] RngStream split(std::uint64_t stream_id) const {
    return RngStream(seed_, stream_id);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next_u64(); }

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, n); n > 0.
  std::uint64_t uniform_int(std::uint64_t n);
  /// Standard normal (Box-Muller).
  double normal();
  /// P(xi = n) = 2^-n for n >= 1, sampled exactly from random bits.
  std::uint32_t geometric_half();

  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::uint64_t stream_id() const { return stream_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
  std::optional<double> spare_normal_;
};

}  // namespace benford
