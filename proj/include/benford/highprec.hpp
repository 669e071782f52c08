#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "benford/bignat.hpp"

namespace benford {

/// ~520 significant decimal digits; used for continued fractions and
/// irrationality probes.
using HighPrec = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<520>>;
/// 50 significant digits; used for logarithms of BigNat values.
using Prec50 = boost::multiprecision::cpp_bin_float_50;

/// A real carried as an unevaluated sum hi + lo of two doubles.
struct SplitReal {
  double hi = 0.0;
  double lo = 0.0;
};

SplitReal split(const HighPrec& x);

/// log_B 2 at full HighPrec precision; B > 1 need not be an integer.
HighPrec log_base_of_two(const HighPrec& base);

/// Exact BigNat to HighPrec conversion (rounded to HighPrec precision).
HighPrec to_highprec(const BigNat& x);

/// Natural log of a BigNat (x >= 1) at 50 digits.
Prec50 ln(const BigNat& x);

}  // namespace benford
