#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "moonshine/arith.hpp"

namespace moonshine {

/// One checked statement. `kind` is "computed" when the artifact evaluated
/// both sides, or "cited" for a fact taken from the literature that is
/// recorded but not recomputed (cited entries never fail).
struct Assertion {
  std::string name;
  std::string kind = "computed";
  std::string expected;
  std::string actual;
  std::string difference;
  bool pass = false;

  friend bool operator==(const Assertion &, const Assertion &) = default;
};

/// actual == expected, with difference actual - expected.
Assertion exact_equal(const std::string &name, const Rational &expected, const Rational &actual);
/// Equality of two printed values (difference "0" or "differs").
Assertion same_text(const std::string &name, const std::string &expected, const std::string &actual);
Assertion cited(const std::string &name, const std::string &statement);

struct VerificationReport {
  std::string case_label;
  std::vector<std::string> computed; // human-readable computed data, one line each
  std::vector<Assertion> assertions;
  std::string conclusion;                    // empty if none
  std::optional<std::int64_t> runtime_us;    // only filled when timing is requested

  bool passed() const;

  nlohmann::ordered_json to_json() const;
  static VerificationReport from_json(const nlohmann::json &j);
  std::string to_text() const;

  friend bool operator==(const VerificationReport &, const VerificationReport &) = default;
};

} // namespace moonshine
