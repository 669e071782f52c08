#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "benford/bignat.hpp"
#include "benford/rng.hpp"
#include "benford/stats.hpp"

namespace benford {

/// A (d,g,h)-map x -> (g x + h(g x)) / d^k, with d^k the largest power of d
/// dividing the numerator.
///
/// h is a table indexed by residue mod d. Only residues 1..d-1 are ever looked
/// up (g x is never 0 mod d on the domain), so those are the entries the
/// invariants x + h(x) = 0 mod d and 0 < |h(x)| < g are checked on.
class DghMap {
 public:
  /// Throws std::invalid_argument when the parameters violate the invariants.
  DghMap(std::uint64_t d, std::uint64_t g, std::vector<std::int64_t> h);

  /// The 3x+1 map: d = 2, g = 3, h = 1.
  static DghMap collatz();

  [[nodiscard]] std::uint64_t d() const { return d_; }
  [[nodiscard]] std::uint64_t g() const { return g_; }
  [[nodiscard]] std::int64_t h(std::uint64_t residue) const { return h_[residue % d_]; }
  [[nodiscard]] const std::vector<std::int64_t>& h_table() const { return h_; }

  /// x in Pi: x >= 1 and divisible by neither d nor g.
  [[nodiscard]] bool in_domain(const BigNat& x) const;

 private:
  std::uint64_t d_;
  std::uint64_t g_;
  std::vector<std::int64_t> h_;
};

/// Raised when an iterate leaves the domain; carries the failing step index.
class PathError : public std::domain_error {
 public:
  PathError(const std::string& what, std::size_t index) : std::domain_error(what), index_(index) {}
  [[nodiscard]] std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

struct StepResult {
  BigNat y;
  std::uint64_t k = 0;
};

/// One application of the map. Throws PathError (index 0) when x is not in Pi.
StepResult step(const DghMap& map, const BigNat& x);

/// In-place step without the domain check; returns k.
std::uint64_t step_inplace(const DghMap& map, BigNat& x);

struct PathRecord {
  BigNat seed;
  std::size_t m = 0;
  std::vector<std::uint64_t> kvalues;
  std::optional<std::vector<BigNat>> iterates;
};

PathRecord path(const DghMap& map, const BigNat& x0, std::size_t m, bool keep_iterates = false);

/// The m-path of a 64-bit seed under 3x+1, for census loops. Throws
/// std::overflow_error if an iterate would leave 64 bits.
void collatz_kvalues_u64(std::uint64_t x0, std::size_t m, std::vector<std::uint64_t>& out);

struct StructurePrediction {
  BigNat modulus;
  std::optional<std::pair<BigNat, BigNat>> residues;
};

/// Modulus 6 * 2^(k_1 + ... + k_m) of the two progressions mapping to ktuple.
StructurePrediction structure_predict(const std::vector<std::uint64_t>& ktuple);

class StructureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InverseScan {
  StructurePrediction prediction;
  std::uint64_t matches = 0;
  std::uint64_t domain_size = 0;  // |Pi intersect [1, T]|
};

/// Exhaustive scan of x in Pi, x <= T, keeping seeds whose m-path is ktuple;
/// verifies the matches are exactly two complete progressions with the
/// predicted modulus and residues {1, 5} mod 6. Throws StructureFailure
/// otherwise, and std::domain_error when T covers fewer than two periods.
InverseScan inverse_path_bruteforce(const std::vector<std::uint64_t>& ktuple, std::uint64_t T);

struct PathProbability {
  double empirical = 0.0;
  double predicted = 0.0;
  std::uint64_t matches = 0;
  std::uint64_t domain_size = 0;
};

PathProbability path_probability_check(const std::vector<std::uint64_t>& ktuple, std::uint64_t T);

/// Seeds start, start + stride, ..., count of them.
struct SeedRange {
  BigNat start;
  std::uint64_t stride = 6;
  std::uint64_t count = 0;
};

struct KValueStats {
  std::vector<std::uint64_t> counts;  // counts[n] = #{k == n}; index 0 unused
  std::uint64_t total = 0;
  double mean = 0.0;
  double variance = 0.0;

  [[nodiscard]] double frequency(std::size_t n) const {
    return n < counts.size() && total != 0 ? static_cast<double>(counts[n]) / static_cast<double>(total) : 0.0;
  }
  void merge(const KValueStats& other);
  void finalize();
};

KValueStats kvalue_histogram(const DghMap& map, const SeedRange& seeds, std::size_t m);

/// log_B x_m - m log_B(3/4) - log_B x_0 mod 1 along the 3x+1 path; m = 0 gives 0.
double ratio_statistic(const BigNat& x0, std::size_t m, double base);

/// Leading base-B digit of x_m / ((3/4)^m x_0), decided by exact integer
/// comparison of 4^m x_m against 3^m x_0 B^e.
unsigned ratio_leading_digit(const BigNat& x0, const BigNat& xm, std::size_t m, unsigned base);

/// (S_m - 2m) log_B 2 mod 1 with S_m a sum of m geometric(1/2) draws. Exact
/// lattice values j/n when B = 2^n.
double geometric_model_sample(std::size_t m, double base, RngStream& rng);

/// log g - (d / (d - 1)) log d; negative drift means decay.
double drift(const DghMap& map);

enum class IterationMode { remove_all_twos, single_step };

struct DigitExperiment {
  DigitHistogram histogram;
  std::uint64_t iterates = 0;
  bool reached_one = false;
};

/// Leading digits of every iterate from x0 (inclusive) until 1 or max_iters
/// recorded iterates. In single_step mode the even intermediates y * 2^j of
/// one odd step are read off y's top bits, never materialized.
DigitExperiment iterate_digit_experiment(const BigNat& x0, IterationMode mode, unsigned base,
                                         std::uint64_t max_iters = 10'000'000);

}  // namespace benford
