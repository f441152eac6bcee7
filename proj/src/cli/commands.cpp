#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigconv/cli.hpp"
#include "sigconv/convolution.hpp"
#include "sigconv/deltaforms.hpp"
#include "sigconv/errors.hpp"
#include "sigconv/eta.hpp"
#include "sigconv/kernels.hpp"
#include "sigconv/modforms.hpp"
#include "sigconv/representations.hpp"

namespace sigconv::cli {

namespace {

OutputFormat parse_format(const std::string& text) {
  return text == "json" ? OutputFormat::json : OutputFormat::csv;
}

std::size_t to_index(std::int64_t n) { return static_cast<std::size_t>(n); }

// Series with coefficient f(n) at n = 1..order and 0 at n = 0.
template <typename F>
QSeries sequence_series(std::size_t order, F&& f) {
  std::vector<Rational> coeffs(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    coeffs[n] = Rational(f(static_cast<std::int64_t>(n)));
  }
  return QSeries(std::move(coeffs));
}

QSeries table_series(const std::vector<Integer>& values, std::size_t order) {
  return sequence_series(order, [&](std::int64_t n) { return values.at(to_index(n)); });
}

// ---- wab ------------------------------------------------------------------

struct WabOptions {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t n_max = 0;
  std::string mode = "both";
  std::string format = "csv";
};

// W_{a,b}(0..n_max) through the gcd reduction and a closed form; throws
// DomainError-style std::domain_error when the reduced pair has none.
std::vector<Integer> formula_column(std::int64_t a, std::int64_t b, std::int64_t n_max) {
  const std::int64_t g = gcd(a, b);
  PairId reduced{std::min(a, b) / g, std::max(a, b) / g};
  if (!has_closed_form(reduced)) {
    throw std::domain_error("no closed form for W_{" + std::to_string(a) + "," + std::to_string(b) +
                            "}; use --mode brute");
  }
  const std::int64_t reduced_max = std::max<std::int64_t>(n_max / g, 1);
  const CuspTable cusp(to_index(reduced_max));
  const auto values = w_formula_table(reduced, reduced_max, cusp);
  std::vector<Integer> out(to_index(n_max) + 1);
  for (std::int64_t n = g; n <= n_max; n += g) {
    out[to_index(n)] = values[to_index(n / g)];
  }
  return out;
}

int cmd_wab(const WabOptions& opt, std::ostream& out) {
  const bool want_formula = opt.mode != "brute";
  const bool want_brute = opt.mode != "formula";
  std::vector<Integer> formula;
  std::vector<Integer> brute;
  if (want_formula) formula = formula_column(opt.a, opt.b, opt.n_max);
  if (want_brute) brute = w_brute_table(opt.a, opt.b, opt.n_max);

  Table table;
  table.columns.push_back("n");
  if (want_formula) table.columns.push_back("w_formula");
  if (want_brute) table.columns.push_back("w_brute");
  if (want_formula && want_brute) table.columns.push_back("match");
  bool all_match = true;
  for (std::int64_t n = 1; n <= opt.n_max; ++n) {
    std::vector<Cell> row{n};
    if (want_formula) row.emplace_back(formula[to_index(n)]);
    if (want_brute) row.emplace_back(brute[to_index(n)]);
    if (want_formula && want_brute) {
      const bool match = formula[to_index(n)] == brute[to_index(n)];
      all_match = all_match && match;
      row.emplace_back(std::int64_t{match ? 1 : 0});
    }
    table.rows.push_back(std::move(row));
  }
  write_table(table, parse_format(opt.format), out);
  return all_match ? kExitOk : kExitMismatch;
}

// ---- r7 -------------------------------------------------------------------

struct R7Options {
  std::int64_t n_max = 0;
  std::string mode = "closed";
  std::string format = "csv";
};

int cmd_r7(const R7Options& opt, std::ostream& out) {
  const bool all = opt.mode == "all";
  const bool want_closed = all || opt.mode == "closed";
  const bool want_via_w = all || opt.mode == "via-w";
  const bool want_enum = all || opt.mode == "enumerate";
  const std::size_t size = to_index(opt.n_max) + 1;

  std::vector<Integer> closed(size);
  std::vector<Integer> via_w(size);
  std::vector<Integer> enumerated;
  if (want_closed || want_via_w) {
    const CuspTable cusp(to_index(opt.n_max));
    kernels::parallel_for(1, opt.n_max + 1, [&](std::int64_t n) {
      if (want_closed) closed[to_index(n)] = r7_closed(n, cusp);
      if (want_via_w) via_w[to_index(n)] = r7_via_w(n, cusp);
    });
  }
  if (want_enum) enumerated = r7_enumerate_table(opt.n_max);

  Table table;
  table.columns.push_back("n");
  if (want_closed) table.columns.push_back("r7_closed");
  if (want_via_w) table.columns.push_back("r7_via_w");
  if (want_enum) table.columns.push_back("r7_enumerate");
  if (all) table.columns.push_back("match");
  bool all_match = true;
  for (std::int64_t n = 1; n <= opt.n_max; ++n) {
    const std::size_t i = to_index(n);
    std::vector<Cell> row{n};
    if (want_closed) row.emplace_back(closed[i]);
    if (want_via_w) row.emplace_back(via_w[i]);
    if (want_enum) row.emplace_back(enumerated[i]);
    if (all) {
      const bool match = closed[i] == via_w[i] && via_w[i] == enumerated[i];
      all_match = all_match && match;
      row.emplace_back(std::int64_t{match ? 1 : 0});
    }
    table.rows.push_back(std::move(row));
  }
  write_table(table, parse_format(opt.format), out);
  return all_match ? kExitOk : kExitMismatch;
}

// ---- eta ------------------------------------------------------------------

struct EtaOptions {
  std::int64_t level = 0;
  std::string spec;
  std::int64_t terms = 0;
};

const char* yes_no(bool value) { return value ? "true" : "false"; }

int cmd_eta(const EtaOptions& opt, std::ostream& out) {
  const auto spec = EtaQuotientSpec::parse(opt.spec, opt.level);
  const LigozatReport report = ligozat_check(spec);
  // Expand before printing so a domain error leaves stdout empty.
  const QSeries series = expand(spec, to_index(opt.terms - 1));

  std::ostringstream text;
  text << "spec: " << spec.to_string() << '\n'
       << "level: " << spec.level() << '\n'
       << "weight: " << report.weight_k << '\n'
       << "s: " << report.s_value << '\n'
       << "cond_i: " << yes_no(report.cond_i) << '\n'
       << "cond_ii: " << yes_no(report.cond_ii) << '\n'
       << "cusp_orders:";
  for (const auto& [d, value] : report.cusp_orders) {
    text << ' ' << d << '=' << value;
  }
  text << '\n'
       << "cond_iii: " << yes_no(report.cond_iii) << '\n'
       << "cond_iii_strict: " << yes_no(report.cond_iii_strict) << '\n'
       << "cond_iv: " << yes_no(report.cond_iv) << '\n'
       << "cond_v: " << yes_no(report.cond_v) << '\n'
       << "is_modular: " << yes_no(report.is_modular) << '\n'
       << "is_cusp: " << yes_no(report.is_cusp) << '\n'
       << "coefficients:\n";
  for (std::size_t n = 0; n <= series.order(); ++n) {
    text << n << ' ' << series.coefficient(n) << '\n';
  }
  out << text.str();
  return kExitOk;
}

// ---- delta ----------------------------------------------------------------

struct DeltaOptions {
  std::string form;
  std::int64_t terms = 0;
  std::string format = "csv";
};

int cmd_delta(const DeltaOptions& opt, std::ostream& out) {
  const std::size_t order = to_index(opt.terms);
  QSeries series(0);
  if (opt.form == "4,7") {
    series = delta_4_7_cuberoot(order);
  } else if (opt.form == "4,14,1") {
    series = delta_4_14(1, order);
  } else {
    series = delta_4_14(2, order);
  }
  Table table;
  table.columns = {"n", "coefficient"};
  for (std::size_t n = 1; n <= order; ++n) {
    table.rows.push_back({static_cast<std::int64_t>(n), series.coefficient(n).numerator()});
  }
  write_table(table, parse_format(opt.format), out);
  return kExitOk;
}

// ---- dispatch -------------------------------------------------------------

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonIntegralResult& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace

// ---- verify ---------------------------------------------------------------

std::vector<IdentityCase> default_identity_suite() {
  std::vector<IdentityCase> suite;
  for (const auto& [a, b] : kSquaredPairs) {
    suite.push_back({"square-" + std::to_string(a) + "-" + std::to_string(b),
                     "(" + std::to_string(a) + "L(q^" + std::to_string(a) + ") - " +
                         std::to_string(b) + "L(q^" + std::to_string(b) +
                         "))^2 matches its tabulated basis coordinates",
                     28, 4, [a = a, b = b](std::size_t order) {
                       const Basis28 basis = Basis28::build(order);
                       return std::pair{squared_l_combination(a, b, order),
                                        reconstruct(published_decomposition(a, b), basis)};
                     }});
  }
  suite.push_back({"cusp-shift", "C_1(q^4) + 4 C_2(q^4) in terms of C_1..C_9", 56, 4,
                   [](std::size_t order) {
                     return std::pair{cusp_shift_lhs(order), cusp_shift_rhs(order)};
                   }});
  suite.push_back({"delta-4-7-cube-root", "cube root of the level-7 bracket equals C_1 + 4 C_2",
                   28, 4, [](std::size_t order) {
                     return std::pair{delta_4_7_cuberoot(order), delta_4_7_eta(order)};
                   }});
  suite.push_back({"delta-4-7-cube", "(C_1 + 4 C_2)^3 equals the level-7 bracket", 7, 12,
                   [](std::size_t order) {
                     return std::pair{pow(delta_4_7_eta(order), 3), delta_4_7_bracket(order)};
                   }});
  suite.push_back({"royer-1-14", "W_{1,14} from level-7 and level-14 cusp forms equals brute force",
                   0, 4, [](std::size_t order) {
                     const auto tables = DeltaTables::build(order);
                     const auto n_max = static_cast<std::int64_t>(order);
                     return std::pair{
                         sequence_series(order,
                                         [&](std::int64_t n) { return w_1_14_royer(n, tables); }),
                         table_series(w_brute_table(1, 14, n_max), order)};
                   }});
  suite.push_back({"lemire-1-7", "W_{1,7} from the cube-root coefficients equals the closed form",
                   0, 4, [](std::size_t order) {
                     const auto tables = DeltaTables::build(order);
                     const CuspTable cusp(order);
                     const auto n_max = static_cast<std::int64_t>(order);
                     return std::pair{
                         sequence_series(order,
                                         [&](std::int64_t n) { return w_1_7_lemire(n, tables); }),
                         table_series(w_formula_table({1, 7}, n_max, cusp), order)};
                   }});
  for (const auto pair : kFormulaPairs) {
    suite.push_back({"formula-" + std::to_string(pair.a) + "-" + std::to_string(pair.b),
                     "closed form for W_{" + std::to_string(pair.a) + "," + std::to_string(pair.b) +
                         "} equals brute force",
                     0, 4, [pair](std::size_t order) {
                       const CuspTable cusp(order);
                       const auto n_max = static_cast<std::int64_t>(order);
                       return std::pair{table_series(w_formula_table(pair, n_max, cusp), order),
                                        table_series(w_brute_table(pair.a, pair.b, n_max), order)};
                     }});
  }
  suite.push_back({"r7-closed", "closed form for R_7 equals enumeration", 0, 4,
                   [](std::size_t order) {
                     const CuspTable cusp(order);
                     const auto n_max = static_cast<std::int64_t>(order);
                     return std::pair{
                         sequence_series(order, [&](std::int64_t n) { return r7_closed(n, cusp); }),
                         table_series(r7_enumerate_table(n_max), order)};
                   }});
  suite.push_back({"r7-via-w", "R_7 through W_{1,7}, W_{4,7}, W_{1,28} equals enumeration", 0, 4,
                   [](std::size_t order) {
                     const CuspTable cusp(order);
                     const auto n_max = static_cast<std::int64_t>(order);
                     return std::pair{
                         sequence_series(order, [&](std::int64_t n) { return r7_via_w(n, cusp); }),
                         table_series(r7_enumerate_table(n_max), order)};
                   }});
  return suite;
}

IdentityOutcome run_identity(const IdentityCase& identity, std::size_t order) {
  IdentityOutcome outcome;
  outcome.name = identity.name;
  outcome.description = identity.description;
  outcome.level = identity.level;
  if (identity.level > 0) {
    outcome.sturm_bound = sturm_bound(identity.level, identity.weight);
  }
  const std::size_t effective = std::max(order, outcome.sturm_bound);
  const auto [lhs, rhs] = identity.sides(effective);
  outcome.verified_order = std::min(lhs.order(), rhs.order());
  outcome.corroborated = equal_up_to(lhs, rhs, outcome.verified_order);
  outcome.sturm_verdict =
      identity.level > 0 ? equal_up_to(lhs, rhs, outcome.sturm_bound) : outcome.corroborated;
  return outcome;
}

int run_verify(const std::vector<IdentityCase>& suite, std::size_t order, const std::string& report,
               std::ostream& out, std::ostream& err) {
  std::vector<IdentityOutcome> outcomes;
  outcomes.reserve(suite.size());
  for (const auto& identity : suite) {
    outcomes.push_back(run_identity(identity, order));
  }
  const auto failed = std::count_if(outcomes.begin(), outcomes.end(),
                                    [](const IdentityOutcome& o) { return !o.passed(); });

  if (report == "json") {
    nlohmann::ordered_json doc;
    doc["order"] = order;
    auto items = nlohmann::ordered_json::array();
    for (const auto& o : outcomes) {
      nlohmann::ordered_json item;
      item["name"] = o.name;
      item["description"] = o.description;
      item["level"] = o.level > 0 ? nlohmann::ordered_json(o.level) : nullptr;
      item["sturm_bound"] = o.level > 0 ? nlohmann::ordered_json(o.sturm_bound) : nullptr;
      item["verified_order"] = o.verified_order;
      item["sturm_verdict"] = o.sturm_verdict;
      item["corroborated"] = o.corroborated;
      item["passed"] = o.passed();
      items.push_back(std::move(item));
    }
    doc["identities"] = std::move(items);
    doc["passed"] = static_cast<std::int64_t>(outcomes.size()) - failed;
    doc["failed"] = failed;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& o : outcomes) {
      out << (o.passed() ? "PASS " : "FAIL ") << o.name << " level="
          << (o.level > 0 ? std::to_string(o.level) : "-")
          << " sturm=" << (o.level > 0 ? std::to_string(o.sturm_bound) : "-")
          << " order=" << o.verified_order << " : " << o.description << '\n';
    }
    out << (outcomes.size() - static_cast<std::size_t>(failed)) << '/' << outcomes.size()
        << " identities verified\n";
  }

  for (const auto& o : outcomes) {
    if (!o.passed()) {
      err << "identity failed: " << o.name << '\n';
      return kExitIdentityFailure;
    }
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convolution sums of divisor functions and related modular identities", "sigconv"};
  app.require_subcommand(1);
  const std::int64_t fallback = static_cast<std::int64_t>(default_order());

  WabOptions wab;
  wab.n_max = fallback;
  auto* wab_cmd = app.add_subcommand("wab", "W_{a,b}(n) for n = 1..n-max");
  wab_cmd->add_option("--a", wab.a, "first weight")->required()->check(CLI::PositiveNumber);
  wab_cmd->add_option("--b", wab.b, "second weight")->required()->check(CLI::PositiveNumber);
  wab_cmd->add_option("--n-max", wab.n_max, "largest n")->check(CLI::PositiveNumber);
  wab_cmd->add_option("--mode", wab.mode)->check(CLI::IsMember({"formula", "brute", "both"}));
  wab_cmd->add_option("--format", wab.format)->check(CLI::IsMember({"csv", "json"}));

  R7Options r7;
  r7.n_max = fallback;
  auto* r7_cmd = app.add_subcommand("r7", "representations by x1^2+x2^2+x3^2+x4^2+7(x5^2+..+x8^2)");
  r7_cmd->add_option("--n-max", r7.n_max, "largest n")->check(CLI::PositiveNumber);
  r7_cmd->add_option("--mode", r7.mode)
      ->check(CLI::IsMember({"closed", "via-w", "enumerate", "all"}));
  r7_cmd->add_option("--format", r7.format)->check(CLI::IsMember({"csv", "json"}));

  std::int64_t verify_order = fallback;
  std::string verify_report = "text";
  auto* verify_cmd = app.add_subcommand("verify", "check every identity through its Sturm bound");
  verify_cmd->add_option("--order", verify_order, "truncation order")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--report", verify_report)->check(CLI::IsMember({"text", "json"}));

  EtaOptions eta;
  eta.terms = fallback;
  auto* eta_cmd = app.add_subcommand("eta", "Ligozat report and q-expansion of an eta quotient");
  eta_cmd->add_option("--level", eta.level)->required()->check(CLI::PositiveNumber);
  eta_cmd->add_option("--spec", eta.spec, "delta:exponent pairs, e.g. 1:5,2:-1")->required();
  eta_cmd->add_option("--terms", eta.terms, "coefficients q^0..q^(terms-1)")
      ->check(CLI::PositiveNumber);

  DeltaOptions delta;
  delta.terms = fallback;
  auto* delta_cmd = app.add_subcommand("delta", "coefficients of a weight-4 cusp form");
  delta_cmd->add_option("--form", delta.form)
      ->required()
      ->check(CLI::IsMember({"4,7", "4,14,1", "4,14,2"}));
  delta_cmd->add_option("--terms", delta.terms, "coefficients n = 1..terms")
      ->check(CLI::PositiveNumber);
  delta_cmd->add_option("--format", delta.format)->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (wab_cmd->parsed()) return guarded([&] { return cmd_wab(wab, out); }, err);
  if (r7_cmd->parsed()) return guarded([&] { return cmd_r7(r7, out); }, err);
  if (eta_cmd->parsed()) return guarded([&] { return cmd_eta(eta, out); }, err);
  if (delta_cmd->parsed()) return guarded([&] { return cmd_delta(delta, out); }, err);
  return guarded(
      [&] {
        return run_verify(default_identity_suite(), static_cast<std::size_t>(verify_order),
                          verify_report, out, err);
      },
      err);
}

}  // namespace sigconv::cli
