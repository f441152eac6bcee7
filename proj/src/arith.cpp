#include "sigconv/arith.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace sigconv {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::string Rational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero rational");
  }
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return q;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("divisors of a non-positive integer");
  }
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) {
        large.push_back(n / d);
      }
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("prime divisors of a non-positive integer");
  }
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) {
        n /= p;
      }
    }
  }
  if (n > 1) {
    primes.push_back(n);
  }
  return primes;
}

Integer sigma(unsigned k, std::int64_t n) {
  if (n <= 0) {
    return 0;
  }
  Integer total = 0;
  Integer term;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) {
      continue;
    }
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), k);
    total += term;
    const auto e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(e), k);
      total += term;
    }
  }
  return total;
}

Integer sigma_scaled(unsigned k, std::int64_t n, std::int64_t d) {
  if (d < 1) {
    throw std::domain_error("sigma_scaled needs d >= 1");
  }
  return n % d == 0 ? sigma(k, n / d) : Integer(0);
}

SigmaTable::SigmaTable(unsigned k, std::int64_t n_max) : k_(k) {
  if (n_max < 0) {
    throw std::domain_error("SigmaTable needs n_max >= 0");
  }
  values_.assign(static_cast<std::size_t>(n_max) + 1, 0);
  constexpr auto limit = std::numeric_limits<std::uint64_t>::max();
  for (std::int64_t d = 1; d <= n_max; ++d) {
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), static_cast<unsigned long>(d), k);
    if (!big.fits_ulong_p()) {
      throw std::overflow_error("sigma table entry exceeds 64 bits");
    }
    const std::uint64_t power = big.get_ui();
    for (std::int64_t m = d; m <= n_max; m += d) {
      auto& slot = values_[static_cast<std::size_t>(m)];
      if (slot > limit - power) {
        throw std::overflow_error("sigma table entry exceeds 64 bits");
      }
      slot += power;
    }
  }
}

std::uint64_t SigmaTable::operator()(std::int64_t n) const {
  if (n <= 0) {
    return 0;
  }
  if (n > n_max()) {
    throw std::out_of_range("sigma table queried beyond n_max");
  }
  return values_[static_cast<std::size_t>(n)];
}

}  // namespace sigconv
