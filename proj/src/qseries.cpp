#include "sigconv/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sigconv/errors.hpp"
#include "sigconv/kernels.hpp"

namespace sigconv {

QSeries::QSeries(std::size_t order) : coeffs_(order + 1) {}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("QSeries needs at least the constant coefficient");
  }
}

QSeries QSeries::one(std::size_t order) { return monomial(order, 0); }

QSeries QSeries::monomial(std::size_t order, std::size_t exponent, const Rational& c) {
  QSeries s(order);
  if (exponent <= order) {
    s.coeffs_[exponent] = c;
  }
  return s;
}

QSeries QSeries::from_integers(std::span<const Integer> coeffs) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    out.emplace_back(c);
  }
  return QSeries(std::move(out));
}

const Rational& QSeries::coefficient(std::size_t n) const {
  if (n > order()) {
    throw OutOfRange("coefficient index " + std::to_string(n) + " beyond truncation order " +
                     std::to_string(order()));
  }
  return coeffs_[n];
}

std::size_t QSeries::valuation() const {
  const auto it = std::find_if(coeffs_.begin(), coeffs_.end(),
                               [](const Rational& c) { return !c.is_zero(); });
  return static_cast<std::size_t>(it - coeffs_.begin());
}

QSeries QSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw OutOfRange("cannot extend a series past its truncation order");
  }
  return QSeries(std::vector<Rational>(coeffs_.begin(),
                                       coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order) + 1));
}

QSeries QSeries::scaled(const Rational& c) const {
  QSeries out(order());
  for (std::size_t n = 0; n <= order(); ++n) {
    out.coeffs_[n] = coeffs_[n] * c;
  }
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) {
    out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  }
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) {
    out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  }
  return out;
}

QSeries operator-(const QSeries& a) { return a.scaled(-1); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  if (order < kernels::kParallelThreshold) {
    return QSeries(kernels::series_product_serial(a.coeffs_, b.coeffs_, order));
  }
  return QSeries(kernels::series_product_parallel(a.coeffs_, b.coeffs_, order));
}

QSeries add(const QSeries& a, const QSeries& b) { return a + b; }

QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries pow(const QSeries& a, unsigned exponent) {
  QSeries result = QSeries::one(a.order());
  QSeries base = a;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = result * base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = base * base;
    }
  }
  return result;
}

QSeries inverse(const QSeries& a) {
  const auto coeffs = a.coeffs();
  if (coeffs[0].is_zero()) {
    throw ZeroConstantTerm();
  }
  const Rational inv0 = Rational(1) / coeffs[0];
  std::vector<Rational> b(a.order() + 1);
  b[0] = inv0;
  mpq_class acc;
  mpq_class term;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (coeffs[i].is_zero() || b[n - i].is_zero()) {
        continue;
      }
      mpq_mul(term.get_mpq_t(), coeffs[i].raw().get_mpq_t(), b[n - i].raw().get_mpq_t());
      acc += term;
    }
    b[n] = -Rational(acc) * inv0;
  }
  return QSeries(std::move(b));
}

QSeries substitute_power(const QSeries& a, std::size_t t) {
  if (t < 1) {
    throw std::invalid_argument("substitute_power needs t >= 1");
  }
  std::vector<Rational> coeffs(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); n += t) {
    coeffs[n] = a.coeffs()[n / t];
  }
  return QSeries(std::move(coeffs));
}

QSeries cube_root(const QSeries& a, std::size_t leading_index) {
  if (leading_index % 3 != 0) {
    throw BadLeadingTerm("cube_root leading index must be a multiple of 3");
  }
  if (leading_index > a.order()) {
    throw BadLeadingTerm("cube_root leading index beyond truncation order");
  }
  const auto coeffs = a.coeffs();
  for (std::size_t i = 0; i < leading_index; ++i) {
    if (!coeffs[i].is_zero()) {
      throw BadLeadingTerm("cube_root input has a term below the leading index");
    }
  }
  if (coeffs[leading_index] != Rational(1)) {
    throw BadLeadingTerm("cube_root input must have leading coefficient 1");
  }

  // a = q^L alpha and b = q^(L/3) beta with alpha_0 = beta_0 = 1. The
  // coefficient of q^n in beta^3 is
  //   3 beta_n + sum_{0<i<n} beta_i beta_{n-i} + sum_{0<i<n} beta_i (beta^2)_{n-i},
  // and (beta^2)_n = 2 beta_n + sum_{0<i<n} beta_i beta_{n-i}; solve for beta_n.
  const std::size_t body_order = a.order() - leading_index;
  std::vector<Rational> beta(body_order + 1);
  std::vector<Rational> square(body_order + 1);
  beta[0] = 1;
  square[0] = 1;
  const Rational third(1, 3);
  for (std::size_t n = 1; n <= body_order; ++n) {
    Rational cross;  // sum_{0<i<n} beta_i beta_{n-i}
    Rational mixed;  // sum_{0<i<n} beta_i square_{n-i}
    for (std::size_t i = 1; i < n; ++i) {
      if (beta[i].is_zero()) {
        continue;
      }
      cross += beta[i] * beta[n - i];
      mixed += beta[i] * square[n - i];
    }
    beta[n] = (coeffs[leading_index + n] - cross - mixed) * third;
    square[n] = Rational(2) * beta[n] + cross;
  }

  const std::size_t shift = leading_index / 3;
  const std::size_t out_order = a.order() - 2 * shift;
  std::vector<Rational> out(out_order + 1);
  for (std::size_t n = shift; n <= out_order; ++n) {
    out[n] = beta[n - shift];
  }
  return QSeries(std::move(out));
}

Rational coefficient(const QSeries& a, std::size_t n) { return a.coefficient(n); }

bool equal_up_to(const QSeries& a, const QSeries& b, std::size_t bound) {
  if (bound > a.order() || bound > b.order()) {
    throw OutOfRange("comparison bound " + std::to_string(bound) + " beyond truncation order");
  }
  for (std::size_t n = 0; n <= bound; ++n) {
    if (a.coeffs()[n] != b.coeffs()[n]) {
      return false;
    }
  }
  return true;
}

}  // namespace sigconv
