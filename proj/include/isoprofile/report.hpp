#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace isoprofile {

using Json = nlohmann::ordered_json;

/// One evaluated inequality. `margin` is positive when it holds strictly.
struct InequalityCheck {
  std::string inequality;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = false;

  Json to_json() const;
};

/// lhs <= rhs + tolerance.
InequalityCheck check_le(std::string inequality, double lhs, double rhs, double tolerance = 0.0);
/// lhs >= rhs - tolerance.
InequalityCheck check_ge(std::string inequality, double lhs, double rhs, double tolerance = 0.0);

/// Result of auditing a statement at one parameter point. Hard assertions
/// carry `pass`; statements with non-explicit constants carry a `witness`.
struct AuditRecord {
  std::string statement_id;
  Json parameters = Json::object();
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<bool> pass;
  std::optional<double> witness;

  Json to_json() const;
};

/// All records pass (records without a pass flag are ignored).
bool all_pass(const std::vector<AuditRecord>& records);
Json to_json(const std::vector<AuditRecord>& records);

/// Writes `contents` to `path` via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace isoprofile
