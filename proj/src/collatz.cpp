#include "benford/collatz.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "benford/equidist.hpp"
#include "benford/highprec.hpp"
#include "benford/mantissa.hpp"

namespace benford {

DghMap::DghMap(std::uint64_t d, std::uint64_t g, std::vector<std::int64_t> h) : d_(d), g_(g), h_(std::move(h)) {
  if (d_ < 2) throw std::invalid_argument("DghMap: d must be >= 2");
  if (g_ <= d_) throw std::invalid_argument("DghMap: g must exceed d");
  if (std::gcd(d_, g_) != 1) throw std::invalid_argument("DghMap: d and g must be coprime");
  if (h_.size() != d_) throw std::invalid_argument("DghMap: h table must have d entries");
  const auto d_signed = static_cast<std::int64_t>(d_);
  const auto g_signed = static_cast<std::int64_t>(g_);
  for (std::int64_t r = 1; r < d_signed; ++r) {
    const std::int64_t value = h_[static_cast<std::size_t>(r)];
    if (((r + value) % d_signed + d_signed) % d_signed != 0) {
      throw std::invalid_argument("DghMap: need x + h(x) = 0 mod d at residue " + std::to_string(r));
    }
    if (value == 0 || std::abs(value) >= g_signed) {
      throw std::invalid_argument("DghMap: need 0 < |h(x)| < g at residue " + std::to_string(r));
    }
  }
}

DghMap DghMap::collatz() { return DghMap(2, 3, {0, 1}); }

bool DghMap::in_domain(const BigNat& x) const {
  return !x.is_zero() && x.mod_small(d_) != 0 && x.mod_small(g_) != 0;
}

std::uint64_t step_inplace(const DghMap& map, BigNat& x) {
  const std::uint64_t residue = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(map.g()) * x.mod_small(map.d())) % map.d());
  const std::int64_t h = map.h(residue);
  x.mul_small_inplace(map.g());
  if (h >= 0) {
    x.add_small_inplace(static_cast<std::uint64_t>(h));
  } else {
    x.sub_small_inplace(static_cast<std::uint64_t>(-h));
  }
  std::uint64_t k = 0;
  if (map.d() == 2) {
    k = x.trailing_zero_bits();
    x.shift_right_inplace(k);
  } else {
    while (x.mod_small(map.d()) == 0) {
      x.divmod_small_inplace(map.d());
      ++k;
    }
  }
  return k;
}

StepResult step(const DghMap& map, const BigNat& x) {
  if (!map.in_domain(x)) throw PathError("step: x is not in the domain of the map", 0);
  StepResult out{x, 0};
  out.k = step_inplace(map, out.y);
  return out;
}

PathRecord path(const DghMap& map, const BigNat& x0, std::size_t m, bool keep_iterates) {
  PathRecord rec;
  rec.seed = x0;
  rec.m = m;
  rec.kvalues.reserve(m);
  if (keep_iterates) rec.iterates.emplace().reserve(m);
  BigNat x = x0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!map.in_domain(x)) {
      throw PathError("path: iterate " + std::to_string(i) + " is not in the domain of the map", i);
    }
    rec.kvalues.push_back(step_inplace(map, x));
    if (keep_iterates) rec.iterates->push_back(x);
  }
  return rec;
}

void collatz_kvalues_u64(std::uint64_t x0, std::size_t m, std::vector<std::uint64_t>& out) {
  out.clear();
  std::uint64_t x = x0;
  constexpr std::uint64_t kLimit = (~std::uint64_t{0} - 1) / 3;
  for (std::size_t i = 0; i < m; ++i) {
    if (x > kLimit) throw std::overflow_error("collatz_kvalues_u64: iterate exceeds 64 bits");
    const std::uint64_t v = 3 * x + 1;
    const auto k = static_cast<std::uint64_t>(std::countr_zero(v));
    out.push_back(k);
    x = v >> k;
  }
}

StructurePrediction structure_predict(const std::vector<std::uint64_t>& ktuple) {
  std::uint64_t total = 0;
  for (auto k : ktuple) {
    if (k < 1) throw std::domain_error("structure_predict: every k-value must be >= 1");
    total += k;
  }
  return {BigNat(6) << total, std::nullopt};
}

namespace {

bool matches_ktuple(std::uint64_t x, const std::vector<std::uint64_t>& ktuple) {
  for (auto k : ktuple) {
    const std::uint64_t v = 3 * x + 1;
    if (static_cast<std::uint64_t>(std::countr_zero(v)) != k) return false;
    x = v >> k;
  }
  return true;
}

}  // namespace

InverseScan inverse_path_bruteforce(const std::vector<std::uint64_t>& ktuple, std::uint64_t T) {
  if (ktuple.empty()) throw std::domain_error("inverse_path_bruteforce: empty k-tuple");
  InverseScan scan;
  scan.prediction = structure_predict(ktuple);
  if (scan.prediction.modulus.bit_length() > 40) throw std::domain_error("inverse_path_bruteforce: k-sum too large");
  const std::uint64_t modulus = scan.prediction.modulus.to_u64();
  if (T < 2 * modulus) throw std::domain_error("inverse_path_bruteforce: T must cover two periods");
  if (T > (~std::uint64_t{0}) / 4 / (std::uint64_t{1} << 20)) throw std::domain_error("inverse_path_bruteforce: T too large");

  std::map<std::uint64_t, std::uint64_t> residue_counts;
  for (std::uint64_t x = 1; x <= T; x += 2) {
    if (x % 3 == 0) continue;
    ++scan.domain_size;
    if (matches_ktuple(x, ktuple)) {
      ++scan.matches;
      ++residue_counts[x % modulus];
    }
  }

  if (residue_counts.size() != 2) {
    throw StructureFailure("inverse_path_bruteforce: expected 2 residue classes, found " +
                           std::to_string(residue_counts.size()));
  }
  for (const auto& [residue, count] : residue_counts) {
    const std::uint64_t full = (T - residue) / modulus + 1;
    if (count != full) {
      throw StructureFailure("inverse_path_bruteforce: residue class " + std::to_string(residue) +
                             " is not a complete progression");
    }
  }
  const std::uint64_t b1 = residue_counts.begin()->first;
  const std::uint64_t b2 = std::next(residue_counts.begin())->first;
  if (!((b1 % 6 == 1 && b2 % 6 == 5) || (b1 % 6 == 5 && b2 % 6 == 1))) {
    throw StructureFailure("inverse_path_bruteforce: residues are not {1, 5} mod 6");
  }
  scan.prediction.residues = std::make_pair(BigNat(b1), BigNat(b2));
  return scan;
}

PathProbability path_probability_check(const std::vector<std::uint64_t>& ktuple, std::uint64_t T) {
  std::uint64_t total = 0;
  for (auto k : ktuple) total += k;
  PathProbability out;
  out.predicted = std::ldexp(1.0, -static_cast<int>(total));
  for (std::uint64_t x = 1; x <= T; x += 2) {
    if (x % 3 == 0) continue;
    ++out.domain_size;
    if (matches_ktuple(x, ktuple)) ++out.matches;
  }
  out.empirical = out.domain_size == 0 ? 0.0 : static_cast<double>(out.matches) / static_cast<double>(out.domain_size);
  return out;
}

void KValueStats::merge(const KValueStats& other) {
  if (other.counts.size() > counts.size()) counts.resize(other.counts.size(), 0);
  for (std::size_t n = 0; n < other.counts.size(); ++n) counts[n] += other.counts[n];
  total += other.total;
}

void KValueStats::finalize() {
  if (total == 0) return;
  double sum = 0.0;
  for (std::size_t n = 0; n < counts.size(); ++n) sum += static_cast<double>(n) * static_cast<double>(counts[n]);
  mean = sum / static_cast<double>(total);
  double sq = 0.0;
  for (std::size_t n = 0; n < counts.size(); ++n) {
    const double dev = static_cast<double>(n) - mean;
    sq += dev * dev * static_cast<double>(counts[n]);
  }
  variance = total > 1 ? sq / static_cast<double>(total - 1) : 0.0;
}

KValueStats kvalue_histogram(const DghMap& map, const SeedRange& seeds, std::size_t m) {
  if (seeds.count == 0) throw std::domain_error("kvalue_histogram: empty seed range");
  KValueStats stats;
  BigNat seed = seeds.start;
  for (std::uint64_t i = 0; i < seeds.count; ++i) {
    if (!map.in_domain(seed)) throw std::domain_error("kvalue_histogram: seed outside the domain of the map");
    BigNat x = seed;
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t k = step_inplace(map, x);
      if (k >= stats.counts.size()) stats.counts.resize(k + 1, 0);
      ++stats.counts[k];
      ++stats.total;
    }
    seed.add_small_inplace(seeds.stride);
  }
  stats.finalize();
  return stats;
}

double ratio_statistic(const BigNat& x0, std::size_t m, double base) {
  if (m == 0) return 0.0;
  const PathRecord rec = path(DghMap::collatz(), x0, m, true);
  const BigNat& xm = rec.iterates->back();
  const Prec50 log_ratio = ln(xm) - ln(x0) - Prec50(static_cast<long long>(m)) * log(Prec50(3) / 4);
  const Prec50 value = log_ratio / log(Prec50(base));
  const double f = Prec50(value - floor(value)).convert_to<double>();
  return f >= 1.0 ? 0.0 : f;
}

unsigned ratio_leading_digit(const BigNat& x0, const BigNat& xm, std::size_t m, unsigned base) {
  if (base < 2) throw std::domain_error("ratio_leading_digit: base must be >= 2");
  if (x0.is_zero() || xm.is_zero()) throw std::domain_error("ratio_leading_digit: zero iterate");
  const BigNat numerator = xm << (2 * m);
  const BigNat denominator = x0 * BigNat::pow(3, m);
  const Prec50 estimate = (ln(numerator) - ln(denominator)) / log(Prec50(base));
  auto e = floor(estimate).convert_to<std::int64_t>();

  // Scale both sides so that the comparison is num / den against B^e.
  auto scaled = [&](std::int64_t exponent) {
    BigNat num = numerator;
    BigNat den = denominator;
    if (exponent >= 0) {
      den = den * BigNat::pow(base, static_cast<std::uint64_t>(exponent));
    } else {
      num = num * BigNat::pow(base, static_cast<std::uint64_t>(-exponent));
    }
    return std::make_pair(std::move(num), std::move(den));
  };
  auto [num, den] = scaled(e);
  while (num < den) {
    --e;
    std::tie(num, den) = scaled(e);
  }
  for (;;) {
    BigNat upper = den;
    upper.mul_small_inplace(base);
    if (num < upper) break;
    ++e;
    std::tie(num, den) = scaled(e);
  }
  unsigned digit = 1;
  for (unsigned j = 2; j < base; ++j) {
    BigNat candidate = den;
    candidate.mul_small_inplace(j);
    if (num < candidate) break;
    digit = j;
  }
  return digit;
}

double geometric_model_sample(std::size_t m, double base, RngStream& rng) {
  if (!(base > 1.0)) throw std::domain_error("geometric_model_sample: base must exceed 1");
  std::int64_t excess = -2 * static_cast<std::int64_t>(m);
  for (std::size_t i = 0; i < m; ++i) excess += rng.geometric_half();

  int exponent = 0;
  const double fraction = std::frexp(base, &exponent);
  if (fraction == 0.5 && exponent >= 2) {
    // base = 2^n: (S - 2m)/n mod 1 lands exactly on the lattice j/n.
    const std::int64_t n = exponent - 1;
    return static_cast<double>(((excess % n) + n) % n) / static_cast<double>(n);
  }

  thread_local double cached_base = 0.0;
  thread_local SplitReal cached_log;
  if (cached_base != base) {
    cached_log = split(log_base_of_two(HighPrec(base)));
    cached_base = base;
  }
  if (excess >= 0) return frac_mul(cached_log, static_cast<std::uint64_t>(excess));
  const double f = frac_mul(cached_log, static_cast<std::uint64_t>(-excess));
  return f == 0.0 ? 0.0 : 1.0 - f;
}

double drift(const DghMap& map) {
  const auto d = static_cast<double>(map.d());
  return std::log(static_cast<double>(map.g())) - d / (d - 1.0) * std::log(d);
}

DigitExperiment iterate_digit_experiment(const BigNat& x0, IterationMode mode, unsigned base,
                                         std::uint64_t max_iters) {
  if (x0 < BigNat(2)) throw std::domain_error("iterate_digit_experiment: seed must be >= 2");
  const LeadingDigitExtractor extract(base);
  DigitExperiment out{DigitHistogram(base), 0, false};
  auto record = [&](const BigNat& value, std::uint64_t extra_bits) {
    out.histogram.add(extract(value, extra_bits));
    ++out.iterates;
  };
  const BigNat one(1);

  BigNat x = x0;
  record(x, 0);
  if (!x.is_odd()) {
    const std::uint64_t twos = x.trailing_zero_bits();
    x.shift_right_inplace(twos);
    if (mode == IterationMode::remove_all_twos) {
      if (out.iterates < max_iters) record(x, 0);
    } else {
      for (std::uint64_t j = twos; j-- > 0 && out.iterates < max_iters;) record(x, j);
    }
  }
  while (x != one && out.iterates < max_iters) {
    x.mul_small_inplace(3);
    x.add_small_inplace(1);
    const std::uint64_t k = x.trailing_zero_bits();
    x.shift_right_inplace(k);
    if (mode == IterationMode::remove_all_twos) {
      record(x, 0);
    } else {
      // 3x+1 = y 2^k, then halvings down to y.
      for (std::uint64_t j = k + 1; j-- > 0 && out.iterates < max_iters;) record(x, j);
    }
  }
  out.reached_one = (x == one);
  return out;
}

}  // namespace benford
