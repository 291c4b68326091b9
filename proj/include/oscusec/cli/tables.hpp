#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oscusec/algebra/context.hpp"

namespace oscusec::cli {

inline constexpr int kTableFormatVersion = 1;

// Frozen column order; mirrored in schemas/table.schema.json.
inline const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> kColumns{
      "table", "parameters", "condition", "predicted", "observed", "verdict", "certificate", "note"};
  return kColumns;
}

struct TableRow {
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::string condition;  // Certified / CertifiedByA / CertifiedByB / NotCertified / Unsupported
  std::optional<std::int64_t> predicted;
  std::optional<std::int64_t> observed;
  std::string verdict;  // speciality verdict from the rank oracle, or identity status
  std::string certificate;
  std::string note;
};

struct TableRequest {
  std::string which;  // corollary1 | corollary2 | theorem2 | laplace
  std::vector<int> d, h, m, n, a, b;  // empty: table default
};

// Documented caps on the ranges a table accepts.
inline constexpr int kMaxDegreeP2 = 25;
inline constexpr int kMaxDegreeP3 = 15;

// Throws InputError for unknown tables or ranges beyond the caps. Rows are
// computed on `threads` workers and returned in parameter order.
std::vector<TableRow> make_table(const TableRequest& request, const ComputeContext& ctx,
                                 unsigned threads);

nlohmann::ordered_json table_to_json(const std::string& which, const std::vector<TableRow>& rows);
std::string table_to_csv(const std::string& which, const std::vector<TableRow>& rows);
std::string table_to_pretty(const std::string& which, const std::vector<TableRow>& rows);

std::string parameters_text(const TableRow& row);

}  // namespace oscusec::cli
