#include <cstdlib>
#include <ostream>
#include <string>

#include <json.hpp>

#include "sigconv/cli.hpp"

namespace sigconv::cli {

namespace {

std::string cell_text(const Cell& cell) {
  struct {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const Integer& v) const { return v.get_str(); }
    std::string operator()(const Rational& v) const { return v.to_string(); }
  } visitor;
  return std::visit(visitor, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  struct {
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(const Integer& v) const {
      if (v.fits_slong_p()) {
        return static_cast<std::int64_t>(v.get_si());
      }
      return v.get_str();
    }
    nlohmann::ordered_json operator()(const Rational& v) const { return v.to_string(); }
  } visitor;
  return std::visit(visitor, cell);
}

}  // namespace

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c == 0 ? "" : ",") << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c == 0 ? "" : ",") << cell_text(row[c]);
      }
      out << '\n';
    }
    return;
  }
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      object[table.columns[c]] = cell_json(row[c]);
    }
    rows.push_back(std::move(object));
  }
  out << rows.dump(2) << '\n';
}

std::size_t default_order() {
  constexpr std::size_t fallback = 100;
  const char* env = std::getenv("SIGMA_CONVOLVE_ORDER");
  if (env == nullptr || *env == '\0') {
    return fallback;
  }
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (*end != '\0' || value == 0) {
    return fallback;
  }
  return static_cast<std::size_t>(value);
}

}  // namespace sigconv::cli
