#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "k3count/bigint.hpp"

namespace k3count {

/// Integer power series known modulo q^order.
///
/// coeffs()[n] is the coefficient of q^n. Binary operations truncate to the
/// smaller of the two orders, so precision is never silently extended.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<BigInt> coeffs);

  std::size_t order() const { return coeffs_.size(); }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }

  // Same series known to fewer terms; `order` must not exceed this->order().
  TruncatedSeries truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Multiplicative identity of the given order. Throws InvalidArgument on 0.
TruncatedSeries series_one(std::size_t order);

/// Cauchy product, truncated at min(a.order(), b.order()).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Inverse of a series whose constant term is +1 or -1.
/// Throws NotInvertible for any other constant term.
TruncatedSeries series_inv(const TruncatedSeries& a);

/// prod_{n=1}^{order-1} (1 - q^n)^exponent mod q^order.
/// Negative exponents go through series_inv.
TruncatedSeries euler_product(long exponent, std::size_t order);

/// e(0..gmax): coefficients of prod_{n>=1} (1 - q^n)^{-24}, i.e. the
/// coefficients of q/Delta(q) shifted down by one. e(0) = 1, e(1) = 24.
std::vector<BigInt> yau_zaslow_coefficients(std::size_t gmax);

}  // namespace k3count
