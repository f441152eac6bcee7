#ifndef SIGCONV_MODFORMS_HPP
#define SIGCONV_MODFORMS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sigconv/arith.hpp"
#include "sigconv/qseries.hpp"

namespace sigconv {

inline constexpr std::array<std::int64_t, 6> kEisensteinDilations = {1, 2, 4, 7, 14, 28};
inline constexpr std::size_t kEisensteinDimension = 6;
inline constexpr std::size_t kCuspDimension = 9;
inline constexpr std::size_t kBasisSize = kEisensteinDimension + kCuspDimension;

// M(q^t) for t | 28 followed by C_1..C_9: a basis of weight-4 forms on Gamma_0(28).
struct Basis28 {
  std::size_t order = 0;
  std::vector<QSeries> eisenstein_parts;
  std::vector<QSeries> cusp_parts;

  // order must be at least the Sturm bound 16.
  static Basis28 build(std::size_t order);

  // Element i in 0..14 in the order above.
  const QSeries& element(std::size_t i) const;
};

// Coordinates of a form in Basis28: x_t for t in kEisensteinDilations, y_1..y_9.
struct CoeffVector {
  std::map<std::int64_t, Rational> x;
  std::vector<Rational> y = std::vector<Rational>(kCuspDimension);

  // y_j for j in 1..9.
  const Rational& cusp(int j) const { return y.at(static_cast<std::size_t>(j - 1)); }

  std::vector<Rational> flatten() const;
  static CoeffVector from_flat(std::span<const Rational> values);

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

// ceil((N/3) prod_{p | N} (1 + 1/p)): the weight-4 Sturm bound for Gamma_0(N).
std::size_t sturm_bound(std::int64_t level);

// ceil((k/12) N prod_{p | N} (1 + 1/p)) for weight k >= 1.
std::size_t sturm_bound(std::int64_t level, unsigned weight);

using RationalMatrix = std::vector<std::vector<Rational>>;

// rows n = 0..n_max, column j = coefficient of q^n in series[j].
RationalMatrix coefficient_matrix(std::span<const QSeries> series, std::size_t n_max);

std::size_t rank(RationalMatrix m);

// Exact solution of the (possibly overdetermined) system A x = b by
// Gauss-Jordan elimination; the pivot for each column is the first row, in
// index order, with a nonzero entry. Throws Underdetermined when A has
// rank below its column count and Inconsistent when a non-pivot row leaves a
// nonzero residual.
std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b);

// Coordinates of target in the basis from the coefficients 0..n_max.
CoeffVector decompose(const QSeries& target, const Basis28& basis, std::size_t n_max);

// sum x_t M(q^t) + sum y_j C_j at basis.order.
QSeries reconstruct(const CoeffVector& coeffs, const Basis28& basis);

struct IdentityCheck {
  bool holds = false;         // agreement through the Sturm bound
  std::size_t sturm_bound = 0;
  bool corroborated = false;  // agreement through checked_order
  std::size_t checked_order = 0;
};

// Sturm-bound verdict for two weight-4 forms of the given level, plus
// agreement over every coefficient both series carry. Throws OutOfRange when
// either series stops short of the bound.
IdentityCheck verify_identity(const QSeries& lhs, const QSeries& rhs, std::int64_t level);

// The five (a, b) pairs whose squared combinations (a L(q^a) - b L(q^b))^2
// are decomposed in Basis28.
inline constexpr std::array<std::array<std::int64_t, 2>, 5> kSquaredPairs = {{
    {1, 28}, {4, 7}, {1, 14}, {2, 7}, {1, 7}}};

// (a L(q^a) - b L(q^b))^2 at the given order.
QSeries squared_l_combination(std::int64_t a, std::int64_t b, std::size_t order);

// Published coordinates of (a L(q^a) - b L(q^b))^2 for the pairs in
// kSquaredPairs; throws std::out_of_range for any other pair.
const CoeffVector& published_decomposition(std::int64_t a, std::int64_t b);

}  // namespace sigconv

#endif  // SIGCONV_MODFORMS_HPP
