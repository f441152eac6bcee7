#ifndef SIGCONV_REPRESENTATIONS_HPP
#define SIGCONV_REPRESENTATIONS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sigconv/arith.hpp"
#include "sigconv/eta.hpp"
#include "sigconv/modforms.hpp"
#include "sigconv/qseries.hpp"

namespace sigconv {

// Jacobi: r_4(0) = 1, r_4(n) = 8 sigma(n) - 32 sigma(n/4).
Integer r4_jacobi(std::int64_t n);

// #{x in Z^4 : |x|^2 = n} by enumeration.
Integer r4_enumerate(std::int64_t n);

// R_7(n) = #{x in Z^8 : x1^2+x2^2+x3^2+x4^2 + 7(x5^2+x6^2+x7^2+x8^2) = n},
// counted as sum_{7m <= n} r_4(n - 7m) r_4(m) with both factors enumerated.
Integer r7_enumerate(std::int64_t n);

// R_7(0..n_max) from the parallel four-square kernel.
std::vector<Integer> r7_enumerate_table(std::int64_t n_max);

// R_7(n) through the convolution sums W_{1,7}, W_{4,7} and W_{1,28}
// (closed forms). n >= 1; cusp must reach n.
Integer r7_via_w(std::int64_t n, const CuspTable& cusp);

// R_7(n) as a combination of sigma_3(n/d) and c_j(n). n >= 1.
Integer r7_closed(std::int64_t n, const CuspTable& cusp);

// The same count before the c_j(n/4) terms are eliminated. n >= 1.
Integer r7_presimplified(std::int64_t n, const CuspTable& cusp);

// C_1(q^4) + 4 C_2(q^4), and the level-28 cusp combination it equals.
QSeries cusp_shift_lhs(std::size_t order);
QSeries cusp_shift_rhs(std::size_t order);

// Compares the two sides at the Gamma_0(56) Sturm bound 32 and at the full
// order. order >= 32.
IdentityCheck verify_cusp_shift_identity(std::size_t order);

}  // namespace sigconv

#endif  // SIGCONV_REPRESENTATIONS_HPP
