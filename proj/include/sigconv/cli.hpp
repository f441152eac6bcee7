#ifndef SIGCONV_CLI_HPP
#define SIGCONV_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sigconv/arith.hpp"
#include "sigconv/qseries.hpp"

namespace sigconv::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitMismatch = 2,
  kExitIdentityFailure = 3,
  kExitDomainError = 4,
};

enum class OutputFormat { csv, json };

// Integers render as JSON numbers (strings only if they overflow 64 bits),
// rationals as "p/q" strings.
using Cell = std::variant<std::int64_t, Integer, Rational>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// CSV: header row, "\n" line endings, no trailing whitespace.
// JSON: an array of objects with keys in column order.
void write_table(const Table& table, OutputFormat format, std::ostream& out);

// Truncation order used when a command is not given one: the value of
// SIGMA_CONVOLVE_ORDER when set to a positive integer, otherwise 100.
std::size_t default_order();

// One identity of the verification suite. `sides(order)` returns both sides
// expanded to at least `order`. Modular-form identities carry the level and
// weight that fix their Sturm bound; coefficient-sequence identities have
// level 0 and are checked over every available index.
struct IdentityCase {
  std::string name;
  std::string description;
  std::int64_t level = 0;
  unsigned weight = 4;
  std::function<std::pair<QSeries, QSeries>(std::size_t order)> sides;
};

struct IdentityOutcome {
  std::string name;
  std::string description;
  std::int64_t level = 0;
  std::size_t sturm_bound = 0;  // 0 when not a modular-form identity
  std::size_t verified_order = 0;
  bool sturm_verdict = false;
  bool corroborated = false;
  bool passed() const { return sturm_verdict && corroborated; }
};

std::vector<IdentityCase> default_identity_suite();

// Runs one case at max(order, its Sturm bound).
IdentityOutcome run_identity(const IdentityCase& identity, std::size_t order);

// Runs every case and writes the report ("text" or "json"). Returns
// kExitOk, or kExitIdentityFailure naming the first failure on err.
int run_verify(const std::vector<IdentityCase>& suite, std::size_t order, const std::string& report,
               std::ostream& out, std::ostream& err);

// Entry point. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigconv::cli

#endif  // SIGCONV_CLI_HPP
