#include "sigma/report.hpp"

#include <iomanip>
#include <sstream>

namespace sigma {

using nlohmann::json;

json report_to_json(const VerificationReport& rep) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["config"] = rep.config;

  json outcomes = json::array();
  int inconsistent = 0;
  for (const TheoremOutcome& o : rep.outcomes) {
    outcomes.push_back({{"theorem_id", o.theorem_id},
                        {"group", o.group_name},
                        {"partition", o.partition},
                        {"subject", o.subject},
                        {"hypothesis", o.hypothesis},
                        {"conclusion", o.conclusion},
                        {"consistent", o.consistent},
                        {"witnesses", o.witnesses},
                        {"notes", o.notes},
                        {"elapsed_ms", o.elapsed_ms}});
    if (!o.consistent) ++inconsistent;
  }
  doc["outcomes"] = std::move(outcomes);

  json suites = json::object();
  int suite_checked = 0, suite_passed = 0;
  for (const auto& [name, counts] : rep.suites) {
    suites[name] = {{"checked", counts.checked},
                    {"passed", counts.passed},
                    {"failures", counts.failures}};
    suite_checked += counts.checked;
    suite_passed += counts.passed;
  }
  doc["suite_results"] = std::move(suites);

  doc["skipped"] = rep.skipped;
  doc["partial"] = rep.partial;
  doc["aborted"] = rep.aborted;
  doc["abort_reason"] = rep.abort_reason;
  if (rep.aborted && !rep.counterexample_group_file.empty()) {
    doc["counterexample"] = {{"group_file", rep.counterexample_group_file},
                             {"partition", rep.counterexample_partition},
                             {"theorem_id", rep.counterexample_theorem}};
  } else {
    doc["counterexample"] = nullptr;
  }
  doc["totals"] = {{"outcomes", rep.outcomes.size()},
                   {"consistent", rep.outcomes.size() - inconsistent},
                   {"inconsistent", inconsistent},
                   {"suite_checked", suite_checked},
                   {"suite_passed", suite_passed}};
  return doc;
}

std::string report_to_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << kToolName << " report\n";
  for (const auto& [k, v] : rep.config) os << "  " << k << " = " << v << "\n";
  os << "\n";
  os << std::left << std::setw(18) << "theorem" << std::setw(14) << "group" << std::setw(12)
     << "partition" << std::setw(5) << "hyp" << std::setw(6) << "concl" << std::setw(4) << "ok"
     << " subject\n";
  for (const TheoremOutcome& o : rep.outcomes) {
    os << std::left << std::setw(18) << o.theorem_id << std::setw(14) << o.group_name
       << std::setw(12) << o.partition << std::setw(5) << (o.hypothesis ? "yes" : "no")
       << std::setw(6) << (o.conclusion ? "yes" : "no") << std::setw(4)
       << (o.consistent ? "ok" : "XX") << " " << o.subject << "\n";
    for (const std::string& n : o.notes) os << "    note: " << n << "\n";
  }
  if (!rep.suites.empty()) {
    os << "\nsuites\n";
    for (const auto& [name, counts] : rep.suites) {
      os << "  " << std::left << std::setw(14) << name << counts.passed << "/" << counts.checked
         << (counts.passed == counts.checked ? "" : "  FAILURES") << "\n";
      for (const std::string& f : counts.failures) os << "    fail: " << f << "\n";
    }
  }
  if (!rep.skipped.empty()) {
    os << "\nskipped\n";
    for (const std::string& s : rep.skipped) os << "  " << s << "\n";
  }
  int inconsistent = 0;
  for (const TheoremOutcome& o : rep.outcomes)
    if (!o.consistent) ++inconsistent;
  os << "\n" << rep.outcomes.size() << " outcomes, " << inconsistent << " inconsistent";
  if (rep.partial) os << " [PARTIAL]";
  if (rep.aborted) os << " [ABORTED: " << rep.abort_reason << "]";
  os << "\n";
  return os.str();
}

void strip_timings(json& doc) {
  if (doc.is_object()) {
    for (auto& [key, value] : doc.items()) {
      if (key == "elapsed_ms" && value.is_number()) {
        value = 0;
      } else {
        strip_timings(value);
      }
    }
  } else if (doc.is_array()) {
    for (json& item : doc) strip_timings(item);
  }
}

namespace {

bool type_matches(const json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "boolean") return doc.is_boolean();
  if (type == "integer") return doc.is_number_integer() || doc.is_number_unsigned();
  if (type == "number") return doc.is_number();
  if (type == "null") return doc.is_null();
  return false;
}

}  // namespace

bool validate_json(const json& doc, const json& schema, std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  if (schema.contains("type")) {
    const json& type = schema["type"];
    if (type.is_string()) {
      if (!type_matches(doc, type.get<std::string>()))
        return fail("expected type " + type.get<std::string>() + ", got " + doc.dump().substr(0, 60));
    } else if (type.is_array()) {
      bool any = false;
      for (const json& t : type)
        if (type_matches(doc, t.get<std::string>())) any = true;
      if (!any) return fail("value matches none of the allowed types");
    }
  }
  if (schema.contains("enum")) {
    bool any = false;
    for (const json& v : schema["enum"])
      if (v == doc) any = true;
    if (!any) return fail("value not in enum");
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const json& key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          return fail("missing required key \"" + key.get<std::string>() + "\"");
    if (schema.contains("properties"))
      for (auto& [key, sub] : schema["properties"].items())
        if (doc.contains(key) && !validate_json(doc.at(key), sub, error)) {
          if (error) *error = "at \"" + key + "\": " + *error;
          return false;
        }
    if (schema.contains("additionalProperties") && schema["additionalProperties"].is_object())
      for (auto& [key, value] : doc.items()) {
        if (schema.contains("properties") && schema["properties"].contains(key)) continue;
        if (!validate_json(value, schema["additionalProperties"], error)) {
          if (error) *error = "at \"" + key + "\": " + *error;
          return false;
        }
      }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < doc.size(); ++i)
      if (!validate_json(doc[i], schema["items"], error)) {
        if (error) *error = "at index " + std::to_string(i) + ": " + *error;
        return false;
      }
  }
  return true;
}

}  // namespace sigma
