#ifndef SIGCONV_ETA_HPP
#define SIGCONV_ETA_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sigconv/arith.hpp"
#include "sigconv/qseries.hpp"

namespace sigconv {

// prod_{delta | level} eta(delta z)^{r_delta}. Zero exponents are dropped;
// every key must divide the level and at least one exponent is nonzero.
class EtaQuotientSpec {
public:
  EtaQuotientSpec(std::int64_t level, const std::map<std::int64_t, std::int64_t>& exponents);

  // "delta:exponent" pairs separated by commas, e.g. "1:5,2:-1,7:5,14:-1".
  // Throws InvalidSpec on malformed text or a delta not dividing level.
  static EtaQuotientSpec parse(const std::string& text, std::int64_t level);

  std::int64_t level() const { return level_; }
  const std::map<std::int64_t, std::int64_t>& exponents() const { return exponents_; }

  // r_delta, zero when delta is absent.
  std::int64_t exponent(std::int64_t delta) const;

  // sum delta * r_delta: the q-power of the product in units of 1/24.
  std::int64_t offset24() const;

  std::string to_string() const;

  friend bool operator==(const EtaQuotientSpec&, const EtaQuotientSpec&) = default;

private:
  std::int64_t level_;
  std::map<std::int64_t, std::int64_t> exponents_;
};

// Product of two eta quotients: exponents add pointwise, level is the lcm.
EtaQuotientSpec combine(const EtaQuotientSpec& a, const EtaQuotientSpec& b);

struct LigozatReport {
  Rational weight_k;                               // (1/2) sum r_delta
  Rational s_value;                                // prod delta^{r_delta}
  bool cond_i = false;                             // sum delta r_delta == 0 mod 24
  bool cond_ii = false;                            // sum (N/delta) r_delta == 0 mod 24
  std::map<std::int64_t, Rational> cusp_orders;   // d -> sum gcd(d,delta)^2 r_delta / delta
  bool cond_iii = false;                           // all cusp orders >= 0
  bool cond_iii_strict = false;                    // all cusp orders > 0
  bool cond_iv = false;                            // k an even integer
  bool cond_v = false;                             // s a rational square
  bool is_modular = false;
  bool is_cusp = false;
};

// q^{offset24/24} * body, with body = prod_delta prod_{n>=1} (1 - q^{delta n})^{r_delta}.
struct EtaExpansion {
  std::int64_t offset24 = 0;
  QSeries body{0};

  // The full expansion at body.order(). Throws FractionalExponent when
  // 24 does not divide offset24 and NegativeValuation when it is negative.
  QSeries to_series() const;
};

EtaExpansion eta_factor(std::int64_t delta, std::int64_t r, std::size_t order);

// Full q-expansion of the eta quotient to the given order.
QSeries expand(const EtaQuotientSpec& spec, std::size_t order);

LigozatReport ligozat_check(const EtaQuotientSpec& spec);

// The nine weight-4 level-28 eta quotients C_1..C_9 spanning the cusp space.
inline constexpr int kCuspGeneratorCount = 9;
const EtaQuotientSpec& cusp_generator_spec(int j);
QSeries c_series(int j, std::size_t order);

// c_1..c_9 expanded to a common order, built concurrently.
class CuspTable {
public:
  explicit CuspTable(std::size_t order);

  std::size_t order() const { return order_; }
  const QSeries& series(int j) const;

  // c_j(n), zero for n <= 0; throws OutOfRange above order().
  const Rational& operator()(int j, std::int64_t n) const;
  // c_j(n / d) when d | n, zero otherwise.
  const Rational& scaled(int j, std::int64_t n, std::int64_t d) const;

private:
  std::size_t order_;
  std::vector<QSeries> series_;
};

}  // namespace sigconv

#endif  // SIGCONV_ETA_HPP
