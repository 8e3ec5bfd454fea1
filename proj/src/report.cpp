#include "moonshine/report.hpp"

#include <algorithm>
#include <sstream>

#include "moonshine/errors.hpp"

namespace moonshine {

Assertion exact_equal(const std::string &name, const Rational &expected, const Rational &actual) {
  const Rational diff = actual - expected;
  return {name, "computed", to_string(expected), to_string(actual), to_string(diff), diff == 0};
}

Assertion same_text(const std::string &name, const std::string &expected, const std::string &actual) {
  const bool same = expected == actual;
  return {name, "computed", expected, actual, same ? "0" : "differs", same};
}

Assertion cited(const std::string &name, const std::string &statement) {
  return {name, "cited", statement, "not recomputed", "", true};
}

bool VerificationReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion &a) { return a.pass; });
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["case"] = case_label;
  j["computed"] = computed;
  j["assertions"] = nlohmann::ordered_json::array();
  for (const auto &a : assertions)
    j["assertions"].push_back({{"name", a.name},
                               {"kind", a.kind},
                               {"expected", a.expected},
                               {"actual", a.actual},
                               {"difference", a.difference},
                               {"pass", a.pass}});
  if (!conclusion.empty()) j["conclusion"] = conclusion;
  j["pass"] = passed();
  if (runtime_us) j["runtime_us"] = *runtime_us;
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json &j) {
  try {
    VerificationReport r;
    r.case_label = j.at("case").get<std::string>();
    r.computed = j.at("computed").get<std::vector<std::string>>();
    for (const auto &a : j.at("assertions"))
      r.assertions.push_back({a.at("name").get<std::string>(), a.at("kind").get<std::string>(),
                              a.at("expected").get<std::string>(), a.at("actual").get<std::string>(),
                              a.at("difference").get<std::string>(), a.at("pass").get<bool>()});
    if (j.contains("conclusion")) r.conclusion = j.at("conclusion").get<std::string>();
    if (j.contains("runtime_us")) r.runtime_us = j.at("runtime_us").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "case: " << case_label << '\n';
  for (const auto &line : computed) out << "  " << line << '\n';
  for (const auto &a : assertions) {
    if (a.kind == "cited") {
      out << "[CITED] " << a.name << ": " << a.expected << '\n';
      continue;
    }
    out << (a.pass ? "[PASS] " : "[FAIL] ") << a.name << ": expected " << a.expected << ", actual " << a.actual;
    if (!a.pass) out << ", difference " << a.difference;
    out << '\n';
  }
  if (!conclusion.empty()) out << "conclusion: " << conclusion << '\n';
  if (runtime_us) out << "runtime: " << *runtime_us << " us\n";
  out << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

} // namespace moonshine
