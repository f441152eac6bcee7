#ifndef SIGCONV_ARITH_HPP
#define SIGCONV_ARITH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sigconv {

using Integer = mpz_class;

// Exact rational number, always held in lowest terms with a positive
// denominator, so two values are equal iff their representations are.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& value);

  // Accepts "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // "p" when the denominator is 1, "p/q" otherwise.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend bool operator<(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ < rhs.value_;
  }
  friend bool operator>(const Rational& lhs, const Rational& rhs) { return rhs < lhs; }
  friend bool operator<=(const Rational& lhs, const Rational& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const Rational& lhs, const Rational& rhs) { return !(lhs < rhs); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
  mpq_class value_;
};

// Smallest integer >= x.
Integer ceil(const Rational& x);

// sigma_k(n) = sum of d^k over the positive divisors of n; zero for n <= 0.
Integer sigma(unsigned k, std::int64_t n);

// sigma_k(n / d) when d divides n, zero otherwise.
Integer sigma_scaled(unsigned k, std::int64_t n, std::int64_t d);

// Dense table of sigma_k(0..n_max) (entry 0 is 0), built once and read-only
// afterwards. Values are held in 64 bits; construction throws
// std::overflow_error if any entry would not fit.
class SigmaTable {
public:
  SigmaTable(unsigned k, std::int64_t n_max);

  unsigned k() const { return k_; }
  std::int64_t n_max() const { return static_cast<std::int64_t>(values_.size()) - 1; }

  // sigma_k(n) with the zero extension for n <= 0; throws std::out_of_range
  // above n_max.
  std::uint64_t operator()(std::int64_t n) const;

  // sigma_k(n / d) if d | n, else 0.
  std::uint64_t scaled(std::int64_t n, std::int64_t d) const {
    return n % d == 0 ? (*this)(n / d) : 0;
  }

private:
  unsigned k_;
  std::vector<std::uint64_t> values_;
};

std::int64_t gcd(std::int64_t a, std::int64_t b);

// Positive divisors of n (n >= 1), ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// Distinct prime divisors of n (n >= 1), ascending.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

}  // namespace sigconv

#endif  // SIGCONV_ARITH_HPP
