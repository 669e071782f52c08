#include "benford/highprec.hpp"

#include <stdexcept>

namespace benford {

namespace {

template <typename Real>
Real from_top_limbs(const BigNat& x, std::size_t max_limbs) {
  const auto limbs = x.limbs();
  const std::size_t take = std::min(limbs.size(), max_limbs);
  Real value = 0;
  for (std::size_t i = 0; i < take; ++i) {
    value = ldexp(value, 64) + Real(limbs[limbs.size() - 1 - i]);
  }
  return ldexp(value, static_cast<int>(64 * (limbs.size() - take)));
}

}  // namespace

SplitReal split(const HighPrec& x) {
  const double hi = x.convert_to<double>();
  const double lo = HighPrec(x - hi).convert_to<double>();
  return {hi, lo};
}

HighPrec log_base_of_two(const HighPrec& base) {
  if (base <= 1) throw std::domain_error("log_base_of_two: base must exceed 1");
  return log(HighPrec(2)) / log(base);
}

HighPrec to_highprec(const BigNat& x) { return from_top_limbs<HighPrec>(x, 30); }

Prec50 ln(const BigNat& x) {
  if (x.is_zero()) throw std::domain_error("ln: argument must be >= 1");
  const auto limbs = x.limbs();
  constexpr std::size_t kTop = 4;
  if (limbs.size() <= kTop) return log(from_top_limbs<Prec50>(x, kTop));
  // log(top * 2^(64*rest)) = log(top) + 64*rest*log 2, keeping the exponent out
  // of the floating-point range.
  Prec50 top = 0;
  for (std::size_t i = 0; i < kTop; ++i) top = ldexp(top, 64) + Prec50(limbs[limbs.size() - 1 - i]);
  const auto rest = static_cast<long long>(limbs.size() - kTop);
  return log(top) + Prec50(64 * rest) * boost::multiprecision::log(Prec50(2));
}

}  // namespace benford
