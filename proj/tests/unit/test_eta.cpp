#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "sigconv/errors.hpp"
#include "sigconv/eta.hpp"
#include "test_support.hpp"

using namespace sigconv;

namespace {

std::map<long, long> as_oracle_spec(const EtaQuotientSpec& spec) {
  std::map<long, long> out;
  for (const auto& [d, r] : spec.exponents()) out[d] = r;
  return out;
}

std::vector<long> first_coeffs(const QSeries& s, std::size_t count) {
  std::vector<long> out;
  for (std::size_t n = 0; n < count; ++n) out.push_back(s.coefficient(n).numerator().get_si());
  return out;
}

}  // namespace

TEST_CASE("spec validation and parsing") {
  const auto spec = EtaQuotientSpec::parse("1:5,2:-1,7:5,14:-1", 28);
  CHECK(spec == cusp_generator_spec(1));
  CHECK(spec.exponent(7) == 5);
  CHECK(spec.exponent(4) == 0);
  CHECK(spec.offset24() == 24);
  CHECK(EtaQuotientSpec::parse(spec.to_string(), 28) == spec);
  CHECK(EtaQuotientSpec(28, {{1, 2}, {2, 0}}).exponents().size() == 1);
  CHECK_THROWS_AS(EtaQuotientSpec::parse("3:4", 28), InvalidSpec);
  CHECK_THROWS_AS(EtaQuotientSpec::parse("1:4,1:2", 28), InvalidSpec);
  CHECK_THROWS_AS(EtaQuotientSpec::parse("1:x", 28), InvalidSpec);
  CHECK_THROWS_AS(EtaQuotientSpec::parse("", 28), InvalidSpec);
  CHECK_THROWS_AS(EtaQuotientSpec(28, {{1, 0}}), InvalidSpec);
  CHECK_THROWS_AS(EtaQuotientSpec(0, {{1, 1}}), InvalidSpec);
}

TEST_CASE("combine") {
  const auto c = combine(EtaQuotientSpec(4, {{1, 2}, {4, 1}}), EtaQuotientSpec(7, {{1, -1}, {7, 3}}));
  CHECK(c.level() == 28);
  CHECK(c.exponent(1) == 1);
  CHECK(c.exponent(4) == 1);
  CHECK(c.exponent(7) == 3);
}

TEST_CASE("eta factor agrees with factor-by-factor multiplication") {
  for (long delta : {1L, 2L, 7L}) {
    for (long r : {-3L, -1L, 1L, 4L}) {
      const auto e = eta_factor(delta, r, 40);
      CHECK(e.offset24 == delta * r);
      CHECK(test_support::matches(e.body, oracle::eta_body(delta, r, 40)));
    }
  }
}

TEST_CASE("pentagonal number theorem") {
  // eta(z) / q^{1/24} = sum (-1)^k q^{k(3k-1)/2}
  const auto body = eta_factor(1, 1, 40).body;
  std::vector<long> expected(41, 0);
  for (long k = -6; k <= 6; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e <= 40) expected[static_cast<std::size_t>(e)] = (k % 2 == 0) ? 1 : -1;
  }
  CHECK(first_coeffs(body, 41) == expected);
}

TEST_CASE("generators agree with the naive product") {
  for (int j = 1; j <= kCuspGeneratorCount; ++j) {
    CAPTURE(j);
    CHECK(test_support::matches(c_series(j, 30),
                                oracle::eta_quotient(as_oracle_spec(cusp_generator_spec(j)), 30)));
  }
}

TEST_CASE("generator expansions") {
  CHECK(first_coeffs(c_series(1, 9), 10) == std::vector<long>{0, 1, -5, 6, 5, -8, -6, -7, 19, 25});
  CHECK(first_coeffs(c_series(2, 9), 10) == std::vector<long>{0, 0, 1, -2, -3, 6, 2, 0, -1, -12});
  CHECK(first_coeffs(c_series(3, 9), 10) == std::vector<long>{0, 0, 0, 1, -6, 11, -2, -7, -10, 6});
  CHECK(first_coeffs(c_series(4, 9), 10) == std::vector<long>{0, 1, 2, -1, -2, -1, -6, 0, -2, -17});
  CHECK(first_coeffs(c_series(5, 9), 10) == std::vector<long>{0, 0, 0, 0, 0, 1, 0, 0, 0, -2});
  const std::vector<std::size_t> leads = {1, 2, 3, 1, 5, 6, 7, 8, 9};
  for (int j = 1; j <= 9; ++j) {
    CHECK(c_series(j, 20).valuation() == leads[static_cast<std::size_t>(j - 1)]);
  }
}

TEST_CASE("expansion domain errors") {
  CHECK_THROWS_AS(expand(EtaQuotientSpec(2, {{1, 1}}), 10), FractionalExponent);
  CHECK_THROWS_AS(expand(EtaQuotientSpec(2, {{1, -24}}), 10), NegativeValuation);
  CHECK(expand(EtaQuotientSpec(1, {{1, 24}}), 0).is_zero());
}

TEST_CASE("ligozat conditions hold for every generator") {
  for (int j = 1; j <= kCuspGeneratorCount; ++j) {
    CAPTURE(j);
    const auto report = ligozat_check(cusp_generator_spec(j));
    CHECK(report.weight_k == 4);
    CHECK(report.cond_i);
    CHECK(report.cond_ii);
    CHECK(report.cond_iii);
    CHECK(report.cond_iv);
    CHECK(report.cond_v);
    CHECK(report.is_modular);
    CHECK(report.is_cusp);
  }
}

TEST_CASE("ligozat rejects non-modular quotients") {
  const auto odd = ligozat_check(EtaQuotientSpec(2, {{1, 1}}));
  CHECK_FALSE(odd.cond_i);
  CHECK_FALSE(odd.is_modular);
  // eta^8(z) eta^8(2z): level 2, weight 8, modular cusp form.
  const auto level2 = ligozat_check(EtaQuotientSpec(2, {{1, 8}, {2, 8}}));
  CHECK(level2.is_modular);
  CHECK(level2.weight_k == 8);
  // eta^6(z) eta^-2(2z): sum (N/delta) r_delta = 2*6 - 2 = 10.
  const auto bad = ligozat_check(EtaQuotientSpec(2, {{1, 6}, {2, -2}}));
  CHECK_FALSE(bad.cond_ii);
  CHECK_FALSE(bad.is_modular);
}

TEST_CASE("cusp table") {
  const CuspTable table(30);
  for (int j = 1; j <= 9; ++j) {
    CHECK(table.series(j) == c_series(j, 30));
  }
  CHECK(table(1, 0) == 0);
  CHECK(table(1, -2) == 0);
  CHECK(table(1, 2) == -5);
  CHECK(table.scaled(1, 8, 4) == -5);
  CHECK(table.scaled(1, 9, 4) == 0);
  CHECK_THROWS_AS(table(1, 31), OutOfRange);
}
