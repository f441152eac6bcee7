#ifndef SIGCONV_CONVOLUTION_HPP
#define SIGCONV_CONVOLUTION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "sigconv/arith.hpp"
#include "sigconv/eta.hpp"

namespace sigconv {

// (a, b) with 1 <= a <= b.
struct PairId {
  std::int64_t a = 1;
  std::int64_t b = 1;

  friend bool operator==(const PairId&, const PairId&) = default;
};

// Pairs with a closed-form evaluation.
inline constexpr std::array<PairId, 5> kFormulaPairs = {{{1, 28}, {4, 7}, {1, 14}, {2, 7}, {1, 7}}};

bool has_closed_form(PairId pair);

// W_{a,b}(n) = sum over (l, m) in N^2 with a l + b m = n of sigma(l) sigma(m).
Integer w_brute(std::int64_t a, std::int64_t b, std::int64_t n);

// W_{a,b}(0..n_max) by the parallel kernel.
std::vector<Integer> w_brute_table(std::int64_t a, std::int64_t b, std::int64_t n_max);

// coeff * sigma_3(n / divisor)
struct Sigma3Term {
  std::int64_t divisor;
  Rational coeff;
};

// (constant + slope * n) * sigma(n / divisor)
struct Sigma1Term {
  std::int64_t divisor;
  Rational constant;
  Rational slope;
};

struct ConvolutionFormula {
  PairId pair;
  std::vector<Sigma3Term> sigma3;
  std::vector<Sigma1Term> sigma1;
  std::array<Rational, kCuspGeneratorCount> cusp;  // coefficient of c_j(n), j = 1..9
};

// The closed form for one of kFormulaPairs; throws std::out_of_range otherwise.
const ConvolutionFormula& convolution_formula(PairId pair);

// Value of the closed form at n, before the integrality check.
Rational evaluate_formula(const ConvolutionFormula& formula, std::int64_t n, const CuspTable& cusp);

// Closed-form W for one of kFormulaPairs. cusp must reach n. Throws
// NonIntegralResult if the value is not a nonnegative integer.
Integer w_formula(PairId pair, std::int64_t n, const CuspTable& cusp);

// w_formula at n = 0..n_max (entry 0 is 0), evaluated concurrently.
std::vector<Integer> w_formula_table(PairId pair, std::int64_t n_max, const CuspTable& cusp);

// W_{a,b}(n) through the gcd reduction W_{a,b}(n) = W_{a/g,b/g}(n/g) (0 when
// g does not divide n), then the closed form when the reduced pair has one
// and brute force otherwise. Either argument order is accepted.
Integer w_reduce(std::int64_t a, std::int64_t b, std::int64_t n, const CuspTable& cusp);
Integer w_reduce(std::int64_t a, std::int64_t b, std::int64_t n);

}  // namespace sigconv

#endif  // SIGCONV_CONVOLUTION_HPP
