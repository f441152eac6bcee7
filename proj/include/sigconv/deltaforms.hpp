#ifndef SIGCONV_DELTAFORMS_HPP
#define SIGCONV_DELTAFORMS_HPP

#include <cstddef>
#include <cstdint>

#include "sigconv/arith.hpp"
#include "sigconv/eta.hpp"
#include "sigconv/qseries.hpp"

namespace sigconv {

// eta^16(z) eta^8(7z) + 13 eta^12(z) eta^12(7z) + 49 eta^8(z) eta^16(7z);
// leading term q^3.
QSeries delta_4_7_bracket(std::size_t order);

// Cube root of delta_4_7_bracket, leading term q. The bracket is expanded two
// orders higher so the result carries the requested order.
QSeries delta_4_7_cuberoot(std::size_t order);

// C_1 + 4 C_2.
QSeries delta_4_7_eta(std::size_t order);

// which = 1: -C_3 + C_4; which = 2: -4 C_2 + C_3 + C_4.
QSeries delta_4_14(int which, std::size_t order);

// Coefficient tables of the weight-4 cusp forms of levels 7 and 14.
struct DeltaTables {
  QSeries u;          // from the cube root
  QSeries tau_4_7;    // from C_1 + 4 C_2
  QSeries tau_4_14_1;
  QSeries tau_4_14_2;

  static DeltaTables build(std::size_t order);
  std::size_t order() const { return tau_4_7.order(); }
};

// W_{1,14}(n) from sigma terms and tau_{4,7}(n), tau_{4,7}(n/2),
// tau_{4,14,1}(n), tau_{4,14,2}(n). n >= 1; throws NonIntegralResult.
Integer w_1_14_royer(std::int64_t n, const DeltaTables& tables);

// W_{1,7}(n) from sigma terms and u(n), the cube-root coefficients. n >= 1.
Integer w_1_7_lemire(std::int64_t n, const DeltaTables& tables);

}  // namespace sigconv

#endif  // SIGCONV_DELTAFORMS_HPP
