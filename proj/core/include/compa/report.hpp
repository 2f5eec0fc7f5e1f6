#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "compa/perm_group.hpp"
#include "compa/types.hpp"

namespace compa {

using json = nlohmann::json;

enum class Verdict { pass, fail, skipped };

std::string_view to_string(Verdict verdict);
Verdict verdict_from_string(std::string_view text);

/// Worst of two verdicts: FAIL dominates SKIPPED dominates PASS.
Verdict combine(Verdict a, Verdict b);

struct GroupDescriptor {
  std::string name;
  std::size_t degree = 0;
  BigInt order = 1;
};

GroupDescriptor describe(const PermGroup& group, std::string name = {});

/// Outcome of one executable check. A FAIL witness carries enough numbers
/// to re-run the instance; a SKIPPED witness carries a "reason" string.
struct CheckReport {
  std::string lemma;
  GroupDescriptor group;
  Verdict verdict = Verdict::pass;
  json witness = json::object();

  json to_json() const;
  static CheckReport from_json(const json& j);
};

CheckReport skipped_report(std::string lemma, const PermGroup& group, std::string reason);

/// Bound values are the only floating-point numbers in certificates; they
/// are rounded to 12 significant digits.
json bound_value(double value);

/// Big integers are rendered as decimal strings.
inline json big(const BigInt& value) { return value.str(); }

json descriptor_json(const GroupDescriptor& group);
GroupDescriptor descriptor_from_json(const json& j);

}  // namespace compa
