#include "sigconv/deltaforms.hpp"

#include <stdexcept>
#include <string>

#include "sigconv/errors.hpp"

namespace sigconv {

namespace {

// tau(n), zero off 1..order; throws OutOfRange above order.
const Rational& tau(const QSeries& s, std::int64_t n) {
  static const Rational zero;
  if (n <= 0) {
    return zero;
  }
  return s.coefficient(static_cast<std::size_t>(n));
}

const Rational& tau_scaled(const QSeries& s, std::int64_t n, std::int64_t d) {
  static const Rational zero;
  return n % d == 0 ? tau(s, n / d) : zero;
}

Integer to_count(const Rational& value, const char* what, std::int64_t n) {
  if (!value.is_integer() || value.sign() < 0) {
    throw NonIntegralResult(std::string(what) + " at n = " + std::to_string(n) + " gave " +
                            value.to_string());
  }
  return value.numerator();
}

}  // namespace

QSeries delta_4_7_bracket(std::size_t order) {
  return expand(EtaQuotientSpec(7, {{1, 16}, {7, 8}}), order) +
         expand(EtaQuotientSpec(7, {{1, 12}, {7, 12}}), order).scaled(13) +
         expand(EtaQuotientSpec(7, {{1, 8}, {7, 16}}), order).scaled(49);
}

QSeries delta_4_7_cuberoot(std::size_t order) {
  if (order < 1) {
    throw std::invalid_argument("delta_4_7_cuberoot needs order >= 1");
  }
  return cube_root(delta_4_7_bracket(order + 2), 3);
}

QSeries delta_4_7_eta(std::size_t order) {
  return c_series(1, order) + c_series(2, order).scaled(4);
}

QSeries delta_4_14(int which, std::size_t order) {
  if (which == 1) {
    return c_series(4, order) - c_series(3, order);
  }
  if (which == 2) {
    return c_series(3, order) + c_series(4, order) - c_series(2, order).scaled(4);
  }
  throw std::invalid_argument("delta_4_14 form must be 1 or 2");
}

DeltaTables DeltaTables::build(std::size_t order) {
  const CuspTable cusp(order);
  const QSeries& c2 = cusp.series(2);
  const QSeries& c3 = cusp.series(3);
  const QSeries& c4 = cusp.series(4);
  return DeltaTables{
      delta_4_7_cuberoot(order),
      cusp.series(1) + c2.scaled(4),
      c4 - c3,
      c3 + c4 - c2.scaled(4),
  };
}

Integer w_1_14_royer(std::int64_t n, const DeltaTables& tables) {
  if (n < 1) {
    throw std::invalid_argument("w_1_14_royer needs n >= 1");
  }
  using R = Rational;
  Rational total = R(1, 600) * R(sigma(3, n)) + R(1, 150) * R(sigma_scaled(3, n, 2)) +
                   R(49, 600) * R(sigma_scaled(3, n, 7)) + R(49, 150) * R(sigma_scaled(3, n, 14)) +
                   (R(1, 24) - R(n, 56)) * R(sigma(1, n)) +
                   (R(1, 24) - R(n, 4)) * R(sigma_scaled(1, n, 14));
  total -= R(3, 350) * tau(tables.tau_4_7, n);
  total -= R(6, 175) * tau_scaled(tables.tau_4_7, n, 2);
  total -= R(1, 84) * tau(tables.tau_4_14_1, n);
  total -= R(1, 200) * tau(tables.tau_4_14_2, n);
  return to_count(total, "w_1_14_royer", n);
}

Integer w_1_7_lemire(std::int64_t n, const DeltaTables& tables) {
  if (n < 1) {
    throw std::invalid_argument("w_1_7_lemire needs n >= 1");
  }
  using R = Rational;
  Rational total = R(1, 120) * R(sigma(3, n)) + R(49, 120) * R(sigma_scaled(3, n, 7)) +
                   (R(1, 24) - R(n, 28)) * R(sigma(1, n)) +
                   (R(1, 24) - R(n, 4)) * R(sigma_scaled(1, n, 7));
  total -= R(1, 70) * tau(tables.u, n);
  return to_count(total, "w_1_7_lemire", n);
}

}  // namespace sigconv
