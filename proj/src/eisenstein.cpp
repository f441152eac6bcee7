#include "sigconv/eisenstein.hpp"

#include <stdexcept>
#include <vector>

#include "sigconv/arith.hpp"

namespace sigconv {

namespace {

QSeries divisor_series(unsigned k, long scale, std::size_t order) {
  const SigmaTable sigma_k(k, static_cast<std::int64_t>(order));
  std::vector<Rational> coeffs(order + 1);
  coeffs[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    const Integer value = Integer(static_cast<unsigned long>(sigma_k(static_cast<std::int64_t>(n)))) * scale;
    coeffs[n] = Rational(value);
  }
  return QSeries(std::move(coeffs));
}

}  // namespace

QSeries l_series(std::size_t order) { return divisor_series(1, -24, order); }

QSeries m_series(std::size_t order) { return divisor_series(3, 240, order); }

QSeries l_combination(std::int64_t a, std::int64_t b, std::size_t order) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("l_combination needs a, b >= 1");
  }
  const QSeries l = l_series(order);
  return substitute_power(l, static_cast<std::size_t>(a)).scaled(a) -
         substitute_power(l, static_cast<std::size_t>(b)).scaled(b);
}

}  // namespace sigconv
