#include "moonshine/verify.hpp"

#include <map>

#include "moonshine/brauer.hpp"
#include "moonshine/errors.hpp"

namespace moonshine {

namespace {

using qseries::LaurentQSeries;

std::string weight_list(const std::vector<brauer::CombinationTerm> &terms) {
  std::string out = "(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ", ";
    out += to_string(terms[i].weight);
  }
  return out + ")";
}

std::string weight_list(const std::vector<Rational> &weights) {
  std::string out = "(";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ", ";
    out += to_string(weights[i]);
  }
  return out + ")";
}

struct Combination {
  std::vector<std::string> lines;
  LaurentQSeries series;
};

// sum over d of weight_d * T_{g^d}, g^d resolved through the power map;
// zero weights are listed but do not need a series.
Combination combine(const qseries::MTTable &table, const std::string &label,
                    const std::vector<brauer::CombinationTerm> &terms, std::int64_t order) {
  Combination c;
  std::vector<std::pair<LaurentQSeries, Rational>> parts;
  for (const auto &t : terms) {
    const std::string cls = table.power_class(label, t.divisor);
    c.lines.push_back("d=" + std::to_string(t.divisor) + " class " + cls + " weight " + to_string(t.weight) +
                      (t.is_zero() ? " (zero)" : ""));
    if (!t.is_zero()) parts.emplace_back(qseries::mckay_thompson(table, cls, order), t.weight);
  }
  c.series = qseries::series_combine(parts);
  c.lines.push_back("combination = " + c.series.to_string());
  return c;
}

} // namespace

VerificationReport verify_counterexample(const qseries::MTTable &table, std::int64_t order) {
  if (order < 4) throw DomainError("the counterexample needs truncation order >= 4");
  VerificationReport r;
  r.case_label = "8A";

  const auto terms = brauer::hauptmodul_combination(8, 2);
  r.assertions.push_back(same_text("weights for N=8, p=2", "(2, 3/4, 1/4)", weight_list(terms)));

  const auto combo = combine(table, "8A", terms, order);
  r.computed = combo.lines;
  r.assertions.push_back(same_text("class of g^2", "4C", table.power_class("8A", 2)));
  r.assertions.push_back(same_text("class of g^4", "2B", table.power_class("8A", 4)));

  const Rational lead = combo.series.coeff(-1);
  const Rational q2 = combo.series.coeff(2);
  r.assertions.push_back(exact_equal("q^-1 coefficient of the combination", 3, lead));
  r.assertions.push_back(exact_equal("q^2 coefficient of the combination", -256, q2));

  const Rational own = qseries::mckay_thompson(table, "8A", order).coeff(2);
  Assertion differs{"q^2 coefficient of T_8A alone differs", "computed", "!= -256", to_string(own),
                    to_string(own - q2), own != q2};
  r.assertions.push_back(differs);

  r.assertions.push_back(
      {"super length at q^2 is negative", "computed", "< 0", to_string(q2), "", q2 < 0});
  if (q2 < 0) r.conclusion = "H^1(g, V_3) != 0 for g in 8A, p = 2";
  return r;
}

VerificationReport worked_relations(std::int64_t group_order, std::int64_t p, const qseries::MTTable &table,
                                    std::int64_t order) {
  static const std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Rational>> expected{
      {{15, 3}, {Rational(4, 5), 0, Rational(1, 5)}},
      {{15, 5}, {Rational(2, 3), Rational(1, 3), 0}},
      {{21, 3}, {Rational(6, 7), 0, Rational(1, 7)}},
      {{21, 7}, {Rational(2, 3), Rational(1, 3), 0}},
  };
  if (group_order != 15 && group_order != 21)
    throw DomainError("worked relations exist for N = 15 and N = 21 only");
  const auto it = expected.find({group_order, p});
  if (it == expected.end()) throw NotAFactor(std::to_string(p) + " is not a prime factor of " + std::to_string(group_order));

  const std::string label = std::to_string(group_order) + "A";
  VerificationReport r;
  r.case_label = label + " p=" + std::to_string(p);

  const auto terms = brauer::hauptmodul_combination(group_order, p);
  r.assertions.push_back(same_text("weights for N=" + std::to_string(group_order) + ", p=" + std::to_string(p),
                                   weight_list(it->second), weight_list(terms)));
  const auto combo = combine(table, label, terms, order);
  r.computed = combo.lines;

  Rational total = 0;
  for (const auto &t : terms) total += t.weight;
  r.assertions.push_back(exact_equal("q^-1 coefficient equals the weight sum", total, combo.series.coeff(-1)));
  r.assertions.push_back(cited("H^1(g, V) = 0 for g in " + label,
                               "H^1(g, V) = 0, so the combination is the graded p-Brauer character of H^0(g, V)"));
  return r;
}

} // namespace moonshine
