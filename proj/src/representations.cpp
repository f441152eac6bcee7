#include "sigconv/representations.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "sigconv/convolution.hpp"
#include "sigconv/errors.hpp"
#include "sigconv/kernels.hpp"

namespace sigconv {

namespace {

std::int64_t isqrt(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

Integer to_count(const Rational& value, const char* what, std::int64_t n) {
  if (!value.is_integer() || value.sign() < 0) {
    throw NonIntegralResult(std::string(what) + " at n = " + std::to_string(n) + " gave " +
                            value.to_string());
  }
  return value.numerator();
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + " needs n >= 1");
  }
}

Rational sigma3_part(std::int64_t n) {
  using R = Rational;
  static const std::array<std::pair<std::int64_t, Rational>, 6> terms = {{
      {1, R(8, 25)}, {2, R(-16, 25)}, {4, R(128, 25)},
      {7, R(392, 25)}, {14, R(-784, 25)}, {28, R(6272, 25)}}};
  Rational total;
  for (const auto& [d, coeff] : terms) {
    total += coeff * Rational(sigma_scaled(3, n, d));
  }
  return total;
}

Rational cusp_part(std::int64_t n, const CuspTable& cusp, const std::array<Rational, 9>& coeffs) {
  Rational total;
  for (int j = 1; j <= kCuspGeneratorCount; ++j) {
    const auto& c = coeffs[static_cast<std::size_t>(j - 1)];
    if (!c.is_zero()) {
      total += c * cusp(j, n);
    }
  }
  return total;
}

// Coordinates of C_1(q^4) + 4 C_2(q^4) in C_1..C_9.
const std::array<Rational, 9>& cusp_shift_coefficients() {
  using R = Rational;
  static const std::array<Rational, 9> coeffs = {R(-1, 56), R(-1, 8), R(-1, 8), R(1, 56), R(2),
                                                 R(0),      R(-1),    R(-2),    R(-2)};
  return coeffs;
}

}  // namespace

Integer r4_jacobi(std::int64_t n) {
  if (n < 0) {
    return 0;
  }
  if (n == 0) {
    return 1;
  }
  return 8 * sigma(1, n) - 32 * sigma_scaled(1, n, 4);
}

Integer r4_enumerate(std::int64_t n) {
  if (n < 0) {
    return 0;
  }
  const std::int64_t r = isqrt(n);
  std::uint64_t count = 0;
  for (std::int64_t x1 = -r; x1 <= r; ++x1) {
    for (std::int64_t x2 = -r; x2 <= r; ++x2) {
      const std::int64_t s2 = x1 * x1 + x2 * x2;
      if (s2 > n) continue;
      for (std::int64_t x3 = -r; x3 <= r; ++x3) {
        const std::int64_t rest = n - s2 - x3 * x3;
        if (rest < 0) continue;
        const std::int64_t x4 = isqrt(rest);
        if (x4 * x4 == rest) {
          count += rest == 0 ? 1 : 2;
        }
      }
    }
  }
  return Integer(static_cast<unsigned long>(count));
}

Integer r7_enumerate(std::int64_t n) {
  if (n < 0) {
    return 0;
  }
  Integer total = 0;
  for (std::int64_t m = 0; 7 * m <= n; ++m) {
    total += r4_enumerate(n - 7 * m) * r4_enumerate(m);
  }
  return total;
}

std::vector<Integer> r7_enumerate_table(std::int64_t n_max) {
  const auto r4 = kernels::four_square_counts_parallel(n_max);
  std::vector<Integer> out(r4.size());
  kernels::parallel_for(0, n_max + 1, [&](std::int64_t n) {
    Integer total = 0;
    for (std::int64_t m = 0; 7 * m <= n; ++m) {
      total += Integer(static_cast<unsigned long>(r4[static_cast<std::size_t>(n - 7 * m)])) *
               static_cast<unsigned long>(r4[static_cast<std::size_t>(m)]);
    }
    out[static_cast<std::size_t>(n)] = total;
  });
  return out;
}

Integer r7_via_w(std::int64_t n, const CuspTable& cusp) {
  require_positive(n, "r7_via_w");
  Integer total = 8 * sigma(1, n) - 32 * sigma_scaled(1, n, 4) + 8 * sigma_scaled(1, n, 7) -
                  32 * sigma_scaled(1, n, 28);
  total += 64 * w_formula({1, 7}, n, cusp);
  if (n % 4 == 0) {
    total += 1024 * w_formula({1, 7}, n / 4, cusp);
  }
  total -= 256 * (w_formula({4, 7}, n, cusp) + w_formula({1, 28}, n, cusp));
  if (total < 0) {
    throw NonIntegralResult("r7_via_w at n = " + std::to_string(n) + " is negative");
  }
  return total;
}

Integer r7_closed(std::int64_t n, const CuspTable& cusp) {
  require_positive(n, "r7_closed");
  using R = Rational;
  static const std::array<Rational, 9> coeffs = {
      R(-928, 175), R(-768, 25), R(32, 5),      R(2272, 175),  R(2304, 25),
      R(768, 5),    R(-1152, 25), R(24576, 25), R(24576, 25)};
  return to_count(sigma3_part(n) + cusp_part(n, cusp, coeffs), "r7_closed", n);
}

Integer r7_presimplified(std::int64_t n, const CuspTable& cusp) {
  require_positive(n, "r7_presimplified");
  using R = Rational;
  static const std::array<Rational, 9> coeffs = {
      R(-6816, 1225), R(-5696, 175), R(32, 7),         R(16224, 1225),  R(21248, 175),
      R(768, 5),      R(-10624, 175), R(166912, 175), R(166912, 175)};
  const Rational shifted = cusp.scaled(1, n, 4) + R(4) * cusp.scaled(2, n, 4);
  return to_count(sigma3_part(n) + cusp_part(n, cusp, coeffs) - R(512, 35) * shifted,
                  "r7_presimplified", n);
}

QSeries cusp_shift_lhs(std::size_t order) {
  const QSeries inner = c_series(1, order) + c_series(2, order).scaled(4);
  return substitute_power(inner, 4);
}

QSeries cusp_shift_rhs(std::size_t order) {
  const CuspTable cusp(order);
  const auto& coeffs = cusp_shift_coefficients();
  QSeries total(order);
  for (int j = 1; j <= kCuspGeneratorCount; ++j) {
    const auto& c = coeffs[static_cast<std::size_t>(j - 1)];
    if (!c.is_zero()) {
      total = total + cusp.series(j).scaled(c);
    }
  }
  return total;
}

IdentityCheck verify_cusp_shift_identity(std::size_t order) {
  if (order < sturm_bound(56)) {
    throw std::invalid_argument("cusp shift identity needs order >= 32");
  }
  return verify_identity(cusp_shift_lhs(order), cusp_shift_rhs(order), 56);
}

}  // namespace sigconv
