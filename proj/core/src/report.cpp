#include "compa/report.hpp"

#include <cstdio>
#include <cstdlib>

#include "compa/error.hpp"

namespace compa {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::skipped:
      return "SKIPPED";
  }
  return "FAIL";
}

Verdict verdict_from_string(std::string_view text) {
  if (text == "PASS") return Verdict::pass;
  if (text == "FAIL") return Verdict::fail;
  if (text == "SKIPPED") return Verdict::skipped;
  throw InvalidArgument("unknown verdict " + std::string(text));
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::skipped || b == Verdict::skipped) return Verdict::skipped;
  return Verdict::pass;
}

GroupDescriptor describe(const PermGroup& group, std::string name) {
  return GroupDescriptor{std::move(name), group.degree(), group.order()};
}

json descriptor_json(const GroupDescriptor& group) {
  return json{{"name", group.name}, {"degree", group.degree}, {"order", big(group.order)}};
}

GroupDescriptor descriptor_from_json(const json& j) {
  return GroupDescriptor{j.at("name").get<std::string>(), j.at("degree").get<std::size_t>(),
                         BigInt(j.at("order").get<std::string>())};
}

json CheckReport::to_json() const {
  return json{{"lemma", lemma},
              {"group", descriptor_json(group)},
              {"verdict", std::string(compa::to_string(verdict))},
              {"witness", witness}};
}

CheckReport CheckReport::from_json(const json& j) {
  CheckReport r;
  r.lemma = j.at("lemma").get<std::string>();
  r.group = descriptor_from_json(j.at("group"));
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.witness = j.at("witness");
  return r;
}

CheckReport skipped_report(std::string lemma, const PermGroup& group, std::string reason) {
  CheckReport r;
  r.lemma = std::move(lemma);
  r.group = describe(group);
  r.verdict = Verdict::skipped;
  r.witness = json{{"reason", std::move(reason)}};
  return r;
}

json bound_value(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return std::strtod(buffer, nullptr);
}

}  // namespace compa
