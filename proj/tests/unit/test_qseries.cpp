#include <doctest.h>

#include "oracles.hpp"
#include "sigconv/errors.hpp"
#include "sigconv/qseries.hpp"
#include "test_support.hpp"

using namespace sigconv;
using test_support::random_series;

TEST_CASE("construction and access") {
  const QSeries z(5);
  CHECK(z.order() == 5);
  CHECK(z.is_zero());
  CHECK(z.valuation() == 6);
  const QSeries m = QSeries::monomial(6, 2, Rational(3, 4));
  CHECK(m.valuation() == 2);
  CHECK(m.coefficient(2) == Rational(3, 4));
  CHECK_THROWS_AS(m.coefficient(7), OutOfRange);
  CHECK_THROWS_AS(coefficient(m, 9), OutOfRange);
  CHECK_THROWS(QSeries(std::vector<Rational>{}));
}

TEST_CASE("binary operations truncate to the smaller order") {
  const QSeries a = random_series(10);
  const QSeries b = random_series(6);
  CHECK((a + b).order() == 6);
  CHECK((a * b).order() == 6);
}

TEST_CASE("product matches schoolbook multiplication on both kernel paths") {
  for (std::size_t order : {5UL, 30UL, 80UL}) {
    const QSeries a = random_series(order);
    const QSeries b = random_series(order);
    CHECK(test_support::matches(a * b, oracle::multiply(test_support::to_poly(a),
                                                        test_support::to_poly(b), order)));
  }
}

TEST_CASE("ring laws") {
  for (int trial = 0; trial < 10; ++trial) {
    const QSeries a = random_series(20);
    const QSeries b = random_series(20);
    const QSeries c = random_series(20);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QSeries(20));
    CHECK(a * QSeries::one(20) == a);
    CHECK(add(a, b) == a + b);
    CHECK(mul(a, b) == a * b);
  }
}

TEST_CASE("pow") {
  const QSeries a = random_series(12);
  CHECK(pow(a, 0) == QSeries::one(12));
  CHECK(pow(a, 1) == a);
  CHECK(pow(a, 5) == a * a * a * a * a);
}

TEST_CASE("inverse") {
  for (int trial = 0; trial < 10; ++trial) {
    QSeries a = random_series(25);
    if (a.coefficient(0).is_zero()) a = a + QSeries::one(25);
    CHECK(a * inverse(a) == QSeries::one(25));
  }
  CHECK_THROWS_AS(inverse(QSeries::monomial(5, 1)), ZeroConstantTerm);
}

TEST_CASE("substitute_power is a ring homomorphism") {
  const QSeries a = random_series(40);
  const QSeries b = random_series(40);
  for (std::size_t t : {1UL, 2UL, 7UL}) {
    CHECK(substitute_power(a * b, t) == substitute_power(a, t) * substitute_power(b, t));
    CHECK(substitute_power(a + b, t) == substitute_power(a, t) + substitute_power(b, t));
  }
  const QSeries s = substitute_power(QSeries::monomial(10, 1, 5) + QSeries::one(10), 4);
  CHECK(s.order() == 10);
  CHECK(s.coefficient(4) == 5);
  CHECK(s.coefficient(8) == 0);
  CHECK_THROWS(substitute_power(a, 0));
}

TEST_CASE("cube root recovers a cubed series") {
  for (std::size_t shift : {0UL, 1UL, 2UL}) {
    const QSeries b = QSeries::monomial(30, shift) * random_series(30, true);
    const std::size_t leading_index = 3 * shift;
    const QSeries root = cube_root(pow(b, 3), leading_index);
    CHECK(root.order() == 30 - 2 * shift);
    CHECK(equal_up_to(root, b, root.order()));
  }
}

TEST_CASE("cube root rejects bad leading terms") {
  CHECK_THROWS_AS(cube_root(QSeries::monomial(10, 2), 2), BadLeadingTerm);
  CHECK_THROWS_AS(cube_root(QSeries::monomial(10, 3, 2), 3), BadLeadingTerm);
  CHECK_THROWS_AS(cube_root(QSeries::monomial(10, 1) + QSeries::monomial(10, 3), 3),
                  BadLeadingTerm);
}

TEST_CASE("equal_up_to") {
  const QSeries a = QSeries::monomial(10, 5);
  CHECK(equal_up_to(a, QSeries(10), 4));
  CHECK_FALSE(equal_up_to(a, QSeries(10), 5));
  CHECK_THROWS_AS(equal_up_to(a, QSeries(3), 4), OutOfRange);
}
