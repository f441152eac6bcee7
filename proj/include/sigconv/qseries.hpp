#ifndef SIGCONV_QSERIES_HPP
#define SIGCONV_QSERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sigconv/arith.hpp"

namespace sigconv {

// Truncated power series sum_{n=0}^{order} a_n q^n over the rationals.
//
// Binary operations truncate to the smaller operand order; coefficients
// above the truncation order are unknown, not zero.
class QSeries {
public:
  // The zero series at the given order.
  explicit QSeries(std::size_t order);
  // Coefficients a_0..a_order; must be non-empty.
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries one(std::size_t order);
  // c q^exponent (the zero series if exponent > order).
  static QSeries monomial(std::size_t order, std::size_t exponent, const Rational& c = 1);
  static QSeries from_integers(std::span<const Integer> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  // Throws OutOfRange when n > order().
  const Rational& coefficient(std::size_t n) const;

  // Index of the first nonzero coefficient, or order() + 1 for the zero series.
  std::size_t valuation() const;
  bool is_zero() const { return valuation() > order(); }

  // Drops coefficients above new_order (new_order <= order()).
  QSeries truncated(std::size_t new_order) const;

  QSeries scaled(const Rational& c) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& c, const QSeries& a) { return a.scaled(c); }

  // Exact structural equality, including the truncation order.
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

private:
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries pow(const QSeries& a, unsigned exponent);

// Multiplicative inverse via b_0 = 1/a_0, b_n = -(sum_{i=1..n} a_i b_{n-i}) / a_0.
// Throws ZeroConstantTerm.
QSeries inverse(const QSeries& a);

// a(q^t), same order as a. t >= 1.
QSeries substitute_power(const QSeries& a, std::size_t t);

// The unique b with leading term q^(leading_index/3), leading coefficient 1,
// and b^3 = a. Requires a_i = 0 below leading_index, a_{leading_index} = 1 and
// 3 | leading_index; throws BadLeadingTerm otherwise. The coefficients of a up
// to a.order() determine b only up to a.order() - 2*leading_index/3, which is
// the order of the result.
QSeries cube_root(const QSeries& a, std::size_t leading_index);

// coeffs[n]; throws OutOfRange when n > a.order().
Rational coefficient(const QSeries& a, std::size_t n);

// Coefficients 0..bound agree exactly. Throws OutOfRange when bound exceeds
// either order.
bool equal_up_to(const QSeries& a, const QSeries& b, std::size_t bound);

}  // namespace sigconv

#endif  // SIGCONV_QSERIES_HPP
