#include "sigconv/eta.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sigconv/errors.hpp"
#include "sigconv/kernels.hpp"

namespace sigconv {

namespace {

// Multiplies the integer series s (in place, truncated to s.size() - 1) by
// (1 - q^m)^r for every m = delta, 2 delta, ... not above the truncation.
// Negative r divides by (1 - q^m), i.e. multiplies by 1 + q^m + q^{2m} + ...
void apply_eta_factor(std::vector<Integer>& s, std::int64_t delta, std::int64_t r) {
  const auto order = static_cast<std::int64_t>(s.size()) - 1;
  const std::int64_t reps = r < 0 ? -r : r;
  for (std::int64_t m = delta; m <= order; m += delta) {
    for (std::int64_t rep = 0; rep < reps; ++rep) {
      if (r > 0) {
        for (std::int64_t i = order; i >= m; --i) {
          s[static_cast<std::size_t>(i)] -= s[static_cast<std::size_t>(i - m)];
        }
      } else {
        for (std::int64_t i = m; i <= order; ++i) {
          s[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i - m)];
        }
      }
    }
  }
}

std::vector<Integer> eta_body(const std::map<std::int64_t, std::int64_t>& exponents,
                              std::size_t order) {
  std::vector<Integer> s(order + 1, 0);
  s[0] = 1;
  for (const auto& [delta, r] : exponents) {
    apply_eta_factor(s, delta, r);
  }
  return s;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

// Multiplies q^shift into the series, keeping the order.
QSeries shift_up(const QSeries& body, std::size_t shift) {
  std::vector<Rational> out(body.order() + 1);
  for (std::size_t n = shift; n <= body.order(); ++n) {
    out[n] = body.coeffs()[n - shift];
  }
  return QSeries(std::move(out));
}

std::size_t checked_valuation(std::int64_t offset24) {
  if (floor_mod(offset24, 24) != 0) {
    throw FractionalExponent("eta quotient has q-power " + std::to_string(offset24) +
                             "/24, not an integer");
  }
  if (offset24 < 0) {
    throw NegativeValuation("eta quotient has negative q-power " + std::to_string(offset24 / 24));
  }
  return static_cast<std::size_t>(offset24 / 24);
}

}  // namespace

EtaQuotientSpec::EtaQuotientSpec(std::int64_t level,
                                 const std::map<std::int64_t, std::int64_t>& exponents)
    : level_(level) {
  if (level < 1) {
    throw InvalidSpec("eta quotient level must be positive");
  }
  for (const auto& [delta, r] : exponents) {
    if (delta < 1 || level % delta != 0) {
      throw InvalidSpec(std::to_string(delta) + " does not divide level " + std::to_string(level));
    }
    if (r != 0) {
      exponents_[delta] = r;
    }
  }
  if (exponents_.empty()) {
    throw InvalidSpec("eta quotient needs at least one nonzero exponent");
  }
}

EtaQuotientSpec EtaQuotientSpec::parse(const std::string& text, std::int64_t level) {
  std::map<std::int64_t, std::int64_t> exponents;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw InvalidSpec("expected delta:exponent, got '" + item + "'");
    }
    std::int64_t delta = 0;
    std::int64_t r = 0;
    try {
      std::size_t used = 0;
      const auto lhs = item.substr(0, colon);
      const auto rhs = item.substr(colon + 1);
      delta = std::stoll(lhs, &used);
      if (used != lhs.size()) throw std::invalid_argument(lhs);
      r = std::stoll(rhs, &used);
      if (used != rhs.size()) throw std::invalid_argument(rhs);
    } catch (const std::logic_error&) {
      throw InvalidSpec("malformed eta quotient term '" + item + "'");
    }
    if (exponents.contains(delta)) {
      throw InvalidSpec("delta " + std::to_string(delta) + " listed twice");
    }
    exponents[delta] = r;
  }
  return EtaQuotientSpec(level, exponents);
}

std::int64_t EtaQuotientSpec::exponent(std::int64_t delta) const {
  const auto it = exponents_.find(delta);
  return it == exponents_.end() ? 0 : it->second;
}

std::int64_t EtaQuotientSpec::offset24() const {
  std::int64_t total = 0;
  for (const auto& [delta, r] : exponents_) {
    total += delta * r;
  }
  return total;
}

std::string EtaQuotientSpec::to_string() const {
  std::string out;
  for (const auto& [delta, r] : exponents_) {
    if (!out.empty()) out += ',';
    out += std::to_string(delta) + ':' + std::to_string(r);
  }
  return out;
}

EtaQuotientSpec combine(const EtaQuotientSpec& a, const EtaQuotientSpec& b) {
  auto exponents = a.exponents();
  for (const auto& [delta, r] : b.exponents()) {
    exponents[delta] += r;
  }
  return EtaQuotientSpec(std::lcm(a.level(), b.level()), exponents);
}

QSeries EtaExpansion::to_series() const {
  return shift_up(body, checked_valuation(offset24));
}

EtaExpansion eta_factor(std::int64_t delta, std::int64_t r, std::size_t order) {
  if (delta < 1) {
    throw std::invalid_argument("eta_factor needs delta >= 1");
  }
  std::vector<Integer> s(order + 1, 0);
  s[0] = 1;
  apply_eta_factor(s, delta, r);
  return EtaExpansion{delta * r, QSeries::from_integers(s)};
}

QSeries expand(const EtaQuotientSpec& spec, std::size_t order) {
  const std::size_t valuation = checked_valuation(spec.offset24());
  if (valuation > order) {
    return QSeries(order);
  }
  const auto body = eta_body(spec.exponents(), order - valuation);
  std::vector<Rational> out(order + 1);
  for (std::size_t n = valuation; n <= order; ++n) {
    out[n] = Rational(body[n - valuation]);
  }
  return QSeries(std::move(out));
}

LigozatReport ligozat_check(const EtaQuotientSpec& spec) {
  LigozatReport report;
  const std::int64_t level = spec.level();

  std::int64_t sum_r = 0;
  std::int64_t sum_dual = 0;
  for (const auto& [delta, r] : spec.exponents()) {
    sum_r += r;
    sum_dual += (level / delta) * r;
  }
  report.weight_k = Rational(sum_r, 2);
  report.cond_i = floor_mod(spec.offset24(), 24) == 0;
  report.cond_ii = floor_mod(sum_dual, 24) == 0;

  report.cond_iii = true;
  report.cond_iii_strict = true;
  for (const auto d : divisors(level)) {
    Rational order_at_cusp;
    for (const auto& [delta, r] : spec.exponents()) {
      const auto g = gcd(d, delta);
      order_at_cusp += Rational(g * g * r, delta);
    }
    if (order_at_cusp.sign() < 0) report.cond_iii = false;
    if (order_at_cusp.sign() <= 0) report.cond_iii_strict = false;
    report.cusp_orders.emplace(d, order_at_cusp);
  }

  report.cond_iv = sum_r % 4 == 0;

  // s is a rational square iff every prime occurs to an even total power.
  std::map<std::int64_t, std::int64_t> prime_powers;
  Rational s = 1;
  for (const auto& [delta, r] : spec.exponents()) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(delta),
                  static_cast<unsigned long>(r < 0 ? -r : r));
    s = r < 0 ? s / Rational(power) : s * Rational(power);
    std::int64_t rest = delta;
    for (const auto p : prime_divisors(delta)) {
      std::int64_t e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      prime_powers[p] += e * r;
    }
  }
  report.s_value = s;
  report.cond_v = true;
  for (const auto& [p, e] : prime_powers) {
    if (e % 2 != 0) report.cond_v = false;
  }

  report.is_modular =
      report.cond_i && report.cond_ii && report.cond_iii && report.cond_iv && report.cond_v;
  report.is_cusp = report.is_modular && report.cond_iii_strict;
  return report;
}

const EtaQuotientSpec& cusp_generator_spec(int j) {
  static const std::vector<EtaQuotientSpec> specs = {
      EtaQuotientSpec(28, {{1, 5}, {2, -1}, {7, 5}, {14, -1}}),
      EtaQuotientSpec(28, {{1, 2}, {2, 2}, {7, 2}, {14, 2}}),
      EtaQuotientSpec(28, {{1, 6}, {2, -2}, {7, -2}, {14, 6}}),
      EtaQuotientSpec(28, {{1, -2}, {2, 6}, {7, 6}, {14, -2}}),
      EtaQuotientSpec(28, {{4, 2}, {14, 4}, {28, 2}}),
      EtaQuotientSpec(28, {{2, 6}, {4, -2}, {14, -2}, {28, 6}}),
      EtaQuotientSpec(28, {{2, 4}, {4, -2}, {28, 6}}),
      EtaQuotientSpec(28, {{1, 1}, {2, 1}, {7, 1}, {14, -3}, {28, 8}}),
      EtaQuotientSpec(28, {{2, 1}, {4, 1}, {14, -3}, {28, 9}}),
  };
  if (j < 1 || j > kCuspGeneratorCount) {
    throw std::out_of_range("cusp generator index must be in 1..9");
  }
  return specs[static_cast<std::size_t>(j - 1)];
}

QSeries c_series(int j, std::size_t order) { return expand(cusp_generator_spec(j), order); }

CuspTable::CuspTable(std::size_t order) : order_(order) {
  series_.assign(kCuspGeneratorCount, QSeries(0));
  kernels::parallel_for(1, kCuspGeneratorCount + 1, [&](std::int64_t j) {
    series_[static_cast<std::size_t>(j - 1)] = c_series(static_cast<int>(j), order);
  });
}

const QSeries& CuspTable::series(int j) const {
  if (j < 1 || j > kCuspGeneratorCount) {
    throw std::out_of_range("cusp generator index must be in 1..9");
  }
  return series_[static_cast<std::size_t>(j - 1)];
}

const Rational& CuspTable::operator()(int j, std::int64_t n) const {
  static const Rational zero;
  if (n <= 0) {
    return zero;
  }
  return series(j).coefficient(static_cast<std::size_t>(n));
}

const Rational& CuspTable::scaled(int j, std::int64_t n, std::int64_t d) const {
  static const Rational zero;
  return n % d == 0 ? (*this)(j, n / d) : zero;
}

}  // namespace sigconv
