// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sigconv/cli.hpp"
#include "sigconv/convolution.hpp"
#include "sigconv/deltaforms.hpp"
#include "sigconv/eisenstein.hpp"
#include "sigconv/eta.hpp"
#include "sigconv/modforms.hpp"
#include "sigconv/representations.hpp"

using namespace sigconv;

namespace {

bool closed_forms_match_brute_force() {
  const CuspTable cusp(1000);
  for (const auto pair : kFormulaPairs) {
    if (w_formula_table(pair, 1000, cusp) != w_brute_table(pair.a, pair.b, 1000)) return false;
  }
  return true;
}

bool decompositions_recovered() {
  using R = Rational;
  const Basis28 basis = Basis28::build(300);
  for (const auto& [a, b] : kSquaredPairs) {
    const QSeries target = squared_l_combination(a, b, 300);
    const CoeffVector found = decompose(target, basis, 16);
    if (found != published_decomposition(a, b)) return false;
    if (reconstruct(found, basis) != target) return false;
    if (a == 1 && b == 28) {
      if (found.x.at(1) != R(118, 125) || found.x.at(2) != R(-21, 125) ||
          found.x.at(28) != R(92512, 125) || found.cusp(8) != R(2327808, 25)) {
        return false;
      }
    }
    if (a == 1 && b == 7) {
      if (found.x.at(1) != R(18, 25) || found.x.at(7) != R(882, 25) || found.cusp(1) != R(576, 5)) {
        return false;
      }
    }
  }
  return true;
}

bool sturm_bounds() { return sturm_bound(28) == 16 && sturm_bound(56) == 32; }

bool r7_evaluations_agree() {
  const CuspTable cusp(200);
  const auto enumerated = r7_enumerate_table(200);
  for (std::int64_t n = 1; n <= 200; ++n) {
    const Integer& e = enumerated[static_cast<std::size_t>(n)];
    if (r7_closed(n, cusp) != e || r7_via_w(n, cusp) != e) return false;
  }
  return enumerated[1] == 8 && enumerated[7] == 72 && oracle::r7(7) == 72;
}

bool cusp_shift_identity() {
  // The report flags the Sturm verdict at 32 separately from the full check.
  std::cout << "  cusp shift: ";
  const auto check = verify_identity(cusp_shift_lhs(100), cusp_shift_rhs(100), 56);
  std::cout << "sturm_bound=" << check.sturm_bound << " verdict=" << (check.holds ? "holds" : "fails")
            << " checked_order=" << check.checked_order
            << " corroborated=" << (check.corroborated ? "yes" : "no") << '\n';
  return check.sturm_bound == 32 && check.holds && check.corroborated && check.checked_order == 100;
}

bool cube_root_identity() {
  const QSeries root = delta_4_7_cuberoot(100);
  return root.order() == 100 && root == delta_4_7_eta(100) &&
         pow(root, 3) == delta_4_7_bracket(100);
}

bool royer_cross_check() {
  const auto tables = DeltaTables::build(500);
  const auto brute = w_brute_table(1, 14, 500);
  for (std::int64_t n = 1; n <= 500; ++n) {
    if (w_1_14_royer(n, tables) != brute[static_cast<std::size_t>(n)]) return false;
  }
  return true;
}

bool jacobi_four_squares() {
  for (std::int64_t n = 0; n <= 500; ++n) {
    if (r4_jacobi(n) != r4_enumerate(n)) return false;
  }
  return true;
}

bool structural() {
  for (int j = 1; j <= kCuspGeneratorCount; ++j) {
    const auto& spec = cusp_generator_spec(j);
    const auto report = ligozat_check(spec);
    if (spec.level() != 28 || !report.is_cusp || report.weight_k != 4) return false;
  }
  const Basis28 basis = Basis28::build(16);
  std::vector<QSeries> all;
  for (std::size_t i = 0; i < kBasisSize; ++i) all.push_back(basis.element(i));
  if (rank(coefficient_matrix(all, 16)) != 15) return false;
  // Cusp rows n = 1..16.
  RationalMatrix cusp_rows = coefficient_matrix(basis.cusp_parts, 16);
  cusp_rows.erase(cusp_rows.begin());
  return cusp_rows.size() == 16 && rank(cusp_rows) == 9;
}

bool l_squared() {
  const QSeries l = l_series(500);
  const QSeries square = l * l;
  if (square.coefficient(0) != 1) return false;
  for (std::int64_t n = 1; n <= 500; ++n) {
    const Integer expected = 240 * oracle::sigma(3, n) - 288 * n * oracle::sigma(1, n);
    if (square.coefficient(static_cast<std::size_t>(n)) != Rational(expected)) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
      {"closed forms for W_{1,28}, W_{4,7}, W_{1,14}, W_{2,7}, W_{1,7} equal brute force, n <= 1000",
       closed_forms_match_brute_force},
      {"squared Eisenstein combinations decompose to the tabulated coordinates; reconstruction to order 300",
       decompositions_recovered},
      {"sturm_bound(28) = 16 and sturm_bound(56) = 32", sturm_bounds},
      {"R7 closed form, via-W form and enumeration agree, n <= 200", r7_evaluations_agree},
      {"C1(q^4) + 4 C2(q^4) equals its nine-term combination to order 100", cusp_shift_identity},
      {"cube root of the level-7 bracket equals C1 + 4 C2 and cubes back exactly", cube_root_identity},
      {"W_{1,14} via level-7 and level-14 cusp forms equals brute force, n <= 500", royer_cross_check},
      {"r4 by Jacobi equals lattice enumeration, n <= 500", jacobi_four_squares},
      {"C1..C9 are weight-4 level-28 cusp forms; basis rank 15; cusp rank 9", structural},
      {"L^2 = 1 + sum (240 sigma_3(n) - 288 n sigma(n)) q^n, n <= 500", l_squared},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    std::string detail;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      detail = std::string(" (") + e.what() + ")";
    }
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first
              << detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << '/' << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
