#include "sigconv/convolution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sigconv/errors.hpp"
#include "sigconv/kernels.hpp"

namespace sigconv {

namespace {

void check_pair(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("convolution pair needs a, b >= 1");
  }
}

std::string describe(PairId pair) {
  return "(" + std::to_string(pair.a) + ", " + std::to_string(pair.b) + ")";
}

Integer to_count(const Rational& value, PairId pair, std::int64_t n) {
  if (!value.is_integer() || value.sign() < 0) {
    throw NonIntegralResult("closed form for W" + describe(pair) + " at n = " + std::to_string(n) +
                            " gave " + value.to_string());
  }
  return value.numerator();
}

}  // namespace

bool has_closed_form(PairId pair) {
  return std::find(kFormulaPairs.begin(), kFormulaPairs.end(), pair) != kFormulaPairs.end();
}

Integer w_brute(std::int64_t a, std::int64_t b, std::int64_t n) {
  check_pair(a, b);
  Integer total = 0;
  for (std::int64_t m = 1; b * m < n; ++m) {
    const std::int64_t rest = n - b * m;
    if (rest % a == 0) {
      total += sigma(1, rest / a) * sigma(1, m);
    }
  }
  return total;
}

std::vector<Integer> w_brute_table(std::int64_t a, std::int64_t b, std::int64_t n_max) {
  check_pair(a, b);
  const SigmaTable sigma1(1, std::max<std::int64_t>(n_max, 0));
  return kernels::convolution_sums_parallel(a, b, n_max, sigma1);
}

const ConvolutionFormula& convolution_formula(PairId pair) {
  using R = Rational;
  static const std::vector<ConvolutionFormula> formulas = {
      {{1, 28},
       {{1, R(1, 2400)}, {2, R(1, 800)}, {4, R(1, 150)},
        {7, R(49, 2400)}, {14, R(49, 800)}, {28, R(49, 150)}},
       {{1, R(1, 24), R(-1, 112)}, {28, R(1, 24), R(-1, 4)}},
       {R(1121, 67200), R(2389, 22400), R(-1, 128), R(-3349, 67200), R(-101, 200),
        R(-17, 40), R(13, 200), R(-433, 150), R(-254, 75)}},
      {{4, 7},
       {{1, R(1, 2400)}, {2, R(1, 800)}, {4, R(1, 150)},
        {7, R(49, 2400)}, {14, R(49, 800)}, {28, R(49, 150)}},
       {{4, R(1, 24), R(-1, 28)}, {7, R(1, 24), R(-1, 16)}},
       {R(697, 470400), R(139, 22400), R(-9, 896), R(-893, 470400), R(43, 1400),
        R(-7, 40), R(241, 1400), R(-881, 1050), R(-178, 525)}},
      {{1, 14},
       {{1, R(1, 600)}, {2, R(1, 150)}, {7, R(49, 600)}, {14, R(49, 150)}},
       {{1, R(1, 24), R(-1, 56)}, {14, R(1, 24), R(-1, 4)}},
       {R(0), R(2, 175), R(-1, 600), R(-107, 4200), R(0), R(0), R(0), R(0), R(0)}},
      {{2, 7},
       {{1, R(1, 600)}, {2, R(1, 150)}, {7, R(49, 600)}, {14, R(49, 150)}},
       {{2, R(1, 24), R(-1, 28)}, {7, R(1, 24), R(-1, 8)}},
       {R(0), R(2, 175), R(-107, 4200), R(-1, 600), R(0), R(0), R(0), R(0), R(0)}},
      {{1, 7},
       {{1, R(1, 120)}, {7, R(49, 120)}},
       {{1, R(1, 24), R(-1, 28)}, {7, R(1, 24), R(-1, 4)}},
       {R(-1, 70), R(-2, 35), R(0), R(0), R(0), R(0), R(0), R(0), R(0)}},
  };
  for (const auto& f : formulas) {
    if (f.pair == pair) {
      return f;
    }
  }
  throw std::out_of_range("no closed form for W" + describe(pair));
}

Rational evaluate_formula(const ConvolutionFormula& formula, std::int64_t n, const CuspTable& cusp) {
  if (n < 1) {
    throw std::invalid_argument("closed forms are stated for n >= 1");
  }
  Rational total;
  for (const auto& term : formula.sigma3) {
    total += term.coeff * Rational(sigma_scaled(3, n, term.divisor));
  }
  for (const auto& term : formula.sigma1) {
    total += (term.constant + term.slope * Rational(n)) * Rational(sigma_scaled(1, n, term.divisor));
  }
  for (int j = 1; j <= kCuspGeneratorCount; ++j) {
    const auto& coeff = formula.cusp[static_cast<std::size_t>(j - 1)];
    if (!coeff.is_zero()) {
      total += coeff * cusp(j, n);
    }
  }
  return total;
}

Integer w_formula(PairId pair, std::int64_t n, const CuspTable& cusp) {
  return to_count(evaluate_formula(convolution_formula(pair), n, cusp), pair, n);
}

std::vector<Integer> w_formula_table(PairId pair, std::int64_t n_max, const CuspTable& cusp) {
  const auto& formula = convolution_formula(pair);
  if (n_max > static_cast<std::int64_t>(cusp.order())) {
    throw OutOfRange("cusp table order " + std::to_string(cusp.order()) + " below n_max " +
                     std::to_string(n_max));
  }
  std::vector<Integer> out(static_cast<std::size_t>(std::max<std::int64_t>(n_max, 0)) + 1);
  kernels::parallel_for(1, n_max + 1, [&](std::int64_t n) {
    out[static_cast<std::size_t>(n)] = to_count(evaluate_formula(formula, n, cusp), pair, n);
  });
  return out;
}

Integer w_reduce(std::int64_t a, std::int64_t b, std::int64_t n, const CuspTable& cusp) {
  check_pair(a, b);
  if (n < 1) {
    throw std::invalid_argument("w_reduce needs n >= 1");
  }
  const std::int64_t g = gcd(a, b);
  if (n % g != 0) {
    return 0;
  }
  const PairId reduced{std::min(a, b) / g, std::max(a, b) / g};
  if (has_closed_form(reduced)) {
    return w_formula(reduced, n / g, cusp);
  }
  return w_brute(reduced.a, reduced.b, n / g);
}

Integer w_reduce(std::int64_t a, std::int64_t b, std::int64_t n) {
  check_pair(a, b);
  const std::int64_t g = gcd(a, b);
  const CuspTable cusp(static_cast<std::size_t>(std::max<std::int64_t>(n / g, 1)));
  return w_reduce(a, b, n, cusp);
}

}  // namespace sigconv
