#pragma once

// Independent route to log|det(I - U e^{-i theta})| for small N: the
// characteristic polynomial by Faddeev-LeVerrier, its roots by Durand-Kerner.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "benford/rmt.hpp"

namespace oracle {

using cplx = std::complex<double>;
using benford::ComplexMatrix;

// Coefficients of det(x I - A), leading coefficient first (Faddeev-LeVerrier).
inline std::vector<cplx> charpoly(const ComplexMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<cplx> c(n + 1);
  c[0] = 1.0;
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + c[k - 1] * id;
    c[k] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

inline cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx v = 0.0;
  for (const cplx& ci : c) v = v * z + ci;
  return v;
}

// Durand-Kerner on the monic polynomial, then a few Newton polishing steps.
inline std::vector<cplx> roots(const std::vector<cplx>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<cplx> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(cplx(0.4, 0.9), static_cast<double>(i));
  for (int iter = 0; iter < 2000; ++iter) {
    double moved = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx denom = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const cplx delta = horner(c, z[i]) / denom;
      z[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-15) break;
  }
  std::vector<cplx> deriv;
  for (std::size_t k = 0; k < n; ++k) deriv.push_back(c[k] * static_cast<double>(n - k));
  for (auto& r : z) {
    for (int iter = 0; iter < 3; ++iter) r -= horner(c, r) / horner(deriv, r);
  }
  return z;
}

inline double log_abs_charpoly(const ComplexMatrix& u, double theta) {
  double sum = 0.0;
  for (const cplx& z : roots(charpoly(u))) sum += std::log(std::abs(1.0 - z * std::polar(1.0, -theta)));
  return sum;
}

}  // namespace oracle
