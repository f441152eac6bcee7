#include <doctest.h>

#include "oracles.hpp"
#include "sigconv/representations.hpp"

using namespace sigconv;

TEST_CASE("r4 by Jacobi and by enumeration agree with the quadruple loop") {
  for (long n = 0; n <= 60; ++n) {
    CHECK(r4_jacobi(n) == oracle::r4(n));
    CHECK(r4_enumerate(n) == oracle::r4(n));
  }
  for (long n = 61; n <= 500; ++n) {
    CHECK(r4_jacobi(n) == r4_enumerate(n));
  }
}

TEST_CASE("r7 known values") {
  CHECK(r7_enumerate(0) == 1);
  CHECK(r7_enumerate(1) == 8);
  CHECK(r7_enumerate(7) == 72);
  CHECK(r7_enumerate(8) == 88);
  CHECK(r7_enumerate(28) == 8920);
}

TEST_CASE("r7 enumeration table matches the oracle") {
  const auto table = r7_enumerate_table(60);
  for (long n = 0; n <= 60; ++n) {
    CHECK(table[static_cast<std::size_t>(n)] == oracle::r7(n));
  }
}

TEST_CASE("four R7 evaluations agree through n = 200") {
  const CuspTable cusp(200);
  const auto enumerated = r7_enumerate_table(200);
  for (long n = 1; n <= 200; ++n) {
    CAPTURE(n);
    const Integer& expected = enumerated[static_cast<std::size_t>(n)];
    REQUIRE(r7_closed(n, cusp) == expected);
    REQUIRE(r7_via_w(n, cusp) == expected);
    REQUIRE(r7_presimplified(n, cusp) == expected);
  }
  CHECK_THROWS(r7_closed(0, cusp));
}

TEST_CASE("cusp shift identity") {
  const auto check = verify_cusp_shift_identity(120);
  CHECK(check.sturm_bound == 32);
  CHECK(check.holds);
  CHECK(check.corroborated);
  CHECK(cusp_shift_lhs(60) == cusp_shift_rhs(60));
  CHECK_THROWS(verify_cusp_shift_identity(31));
}
