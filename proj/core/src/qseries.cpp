#include "k3count/qseries.hpp"

#include <algorithm>
#include <cstdlib>

#include "k3count/error.hpp"

namespace k3count {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > coeffs_.size()) {
    throw InvalidArgument("cannot extend a truncated series");
  }
  return TruncatedSeries(
      std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order));
}

TruncatedSeries series_one(std::size_t order) {
  if (order == 0) throw InvalidArgument("series order must be positive");
  std::vector<BigInt> c(order);
  c[0] = 1;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a,
                           const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<BigInt> c(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < order; ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_inv(const TruncatedSeries& a) {
  const std::size_t order = a.order();
  if (order == 0) return a;
  const BigInt& a0 = a[0];
  if (a0 != 1 && a0 != -1) {
    throw NotInvertible("constant term " + a0.str() + " is not a unit");
  }
  // a0 is its own inverse.
  std::vector<BigInt> b(order);
  b[0] = a0;
  for (std::size_t n = 1; n < order; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) acc += a[k] * b[n - k];
    }
    b[n] = -a0 * acc;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries euler_product(long exponent, std::size_t order) {
  TruncatedSeries one = series_one(order);
  if (exponent == 0) return one;

  std::vector<BigInt> c(one.coeffs().begin(), one.coeffs().end());
  const long power = std::labs(exponent);
  for (std::size_t n = 1; n < order; ++n) {
    for (long rep = 0; rep < power; ++rep) {
      // multiply by (1 - q^n) in place, high degrees first
      for (std::size_t k = order - 1; k >= n; --k) {
        c[k] -= c[k - n];
      }
    }
  }
  TruncatedSeries product(std::move(c));
  return exponent > 0 ? product : series_inv(product);
}

std::vector<BigInt> yau_zaslow_coefficients(std::size_t gmax) {
  TruncatedSeries s = euler_product(-24, gmax + 1);
  return {s.coeffs().begin(), s.coeffs().end()};
}

}  // namespace k3count
