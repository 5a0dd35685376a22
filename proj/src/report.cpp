#include "isoprofile/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "isoprofile/errors.hpp"

namespace isoprofile {

Json InequalityCheck::to_json() const {
  return Json{{"inequality", inequality}, {"lhs", lhs}, {"rhs", rhs}, {"margin", margin}, {"pass", pass}};
}

InequalityCheck check_le(std::string inequality, double lhs, double rhs, double tolerance) {
  return {std::move(inequality), lhs, rhs, rhs - lhs, lhs <= rhs + tolerance};
}

InequalityCheck check_ge(std::string inequality, double lhs, double rhs, double tolerance) {
  return {std::move(inequality), lhs, rhs, lhs - rhs, lhs >= rhs - tolerance};
}

Json AuditRecord::to_json() const {
  Json out{{"statement_id", statement_id}, {"parameters", parameters}, {"lhs", lhs}, {"rhs", rhs}};
  if (pass) out["pass"] = *pass;
  if (witness) out["witness"] = *witness;
  return out;
}

bool all_pass(const std::vector<AuditRecord>& records) {
  for (const auto& r : records)
    if (r.pass && !*r.pass) return false;
  return true;
}

Json to_json(const std::vector<AuditRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) out.push_back(r.to_json());
  return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + temp.string() + " for writing");
    out << contents;
    if (!out) throw Error("failed writing " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::filesystem::remove(temp);
    throw Error("cannot rename " + temp.string() + " to " + path + ": " + ec.message());
  }
}

}  // namespace isoprofile
