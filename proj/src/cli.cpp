#include "moonshine/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <numeric>
#include <ostream>

#include <CLI11.hpp>

#include "moonshine/brauer.hpp"
#include "moonshine/errors.hpp"
#include "moonshine/leech.hpp"
#include "moonshine/qseries.hpp"
#include "moonshine/report.hpp"
#include "moonshine/tate.hpp"
#include "moonshine/verify.hpp"

#ifndef MOONSHINE_DEFAULT_DATA_DIR
#define MOONSHINE_DEFAULT_DATA_DIR "data"
#endif

namespace moonshine {

namespace {

std::string data_dir() {
  if (const char *env = std::getenv("MOONSHINE_DATA_DIR"); env && *env) return env;
  return MOONSHINE_DEFAULT_DATA_DIR;
}

class UsageError : public DomainError {
public:
  using DomainError::DomainError;
};

struct Options {
  bool json = false;
  bool timing = false;
  std::string matrix;
  std::string data;
  std::string perm;
  std::string class_label;
  std::string case_label = "8A";
  std::int64_t order = 0;
  std::int64_t prime = 0;
  std::int64_t modulus = 0;
  std::int64_t trunc = 12;
  std::uint64_t seed = 1;
  bool oracle = false;
};

qseries::MTTable table_for(const Options &o) {
  return qseries::load_mt_table(o.data.empty() ? data_dir() + "/mt_series.txt" : o.data);
}

VerificationReport run_tate(const Options &o) {
  VerificationReport r;
  r.case_label = "tate";
  const auto g = linalg::parse_matrix_file(o.matrix);
  const tate::CyclicAction action(g, o.order);
  r.computed.push_back("rank " + std::to_string(action.rank()) + ", N = " + std::to_string(o.order) +
                       ", exact order " + std::to_string(action.exact_order()));
  tate::TateResult t;
  if (o.modulus > 0) {
    r.computed.push_back("module Z^" + std::to_string(action.rank()) + " / " + std::to_string(o.modulus));
    t = tate::tate_presented(g, tate::PresentedModule::reduction_mod(action.rank(), o.modulus), o.order);
  } else {
    t = tate::tate_free(action);
  }
  r.computed.push_back("h0 = " + t.h0.to_string());
  r.computed.push_back("h1 = " + t.h1.to_string());
  r.assertions.push_back(same_text("N kills H^0 and H^1", "true",
                                   t.h0.annihilated_by(o.order) && t.h1.annihilated_by(o.order) ? "true" : "false"));
  if (o.modulus > 0)
    r.assertions.push_back(exact_equal("|H^0| = |H^1| on the finite module", Rational(t.h0.order()),
                                       Rational(t.h1.order())));
  return r;
}

VerificationReport run_brauer(const Options &o) {
  VerificationReport r;
  r.case_label = "brauer-coeffs N=" + std::to_string(o.order) + " p=" + std::to_string(o.prime);
  const auto closed = brauer::coeff_closed_form(o.order, o.prime);
  std::optional<brauer::CoeffTable> dft;
  if (o.oracle) dft = brauer::coeff_dft_oracle(o.order, o.prime);
  const std::int64_t pn = ipow(o.prime, multiplicity(o.order, o.prime));
  r.computed.push_back(o.oracle ? "k gcd a_k oracle" : "k gcd a_k");
  std::int64_t mismatches = 0;
  for (const auto &[k, a] : closed.entries) {
    std::string line = std::to_string(k) + " " + std::to_string(std::gcd(k, pn)) + " " + to_string(a);
    if (dft) {
      const Rational &b = dft->entries.at(k);
      line += " " + to_string(b);
      if (b != a) ++mismatches;
    }
    r.computed.push_back(line);
  }
  for (const auto &t : brauer::hauptmodul_combination(o.order, o.prime))
    r.computed.push_back("weight d=" + std::to_string(t.divisor) + " " + to_string(t.weight));
  if (dft) r.assertions.push_back(exact_equal("entries where the oracle differs", 0, mismatches));
  std::int64_t bad = 0;
  for (const auto &[k, a] : closed.entries)
    if (a != closed.entries.at(std::gcd(k, pn))) ++bad;
  r.assertions.push_back(exact_equal("entries not determined by gcd(k, p^n)", 0, bad));
  return r;
}

VerificationReport run_series(const Options &o) {
  VerificationReport r;
  r.case_label = "mt-series " + o.class_label;
  const auto s = qseries::mckay_thompson(table_for(o), o.class_label, o.trunc);
  r.computed.push_back("T_" + o.class_label + " = " + s.to_string());
  r.assertions.push_back(exact_equal("q^-1 coefficient", 1, s.coeff(-1)));
  r.assertions.push_back(exact_equal("constant term", 0, s.coeff(0)));
  return r;
}

VerificationReport run_verify(const Options &o) {
  if (o.case_label != "8A") throw UsageError("unknown case '" + o.case_label + "' (available: 8A)");
  return verify_counterexample(table_for(o), o.trunc);
}

VerificationReport run_leech(const Options &o) {
  VerificationReport r;
  r.case_label = "leech-h1 order " + std::to_string(o.order) + " seed " + std::to_string(o.seed);
  const auto code = leech::build_golay();
  const auto basis = leech::build_leech(code);
  const auto gens = leech::load_m24_generators(o.perm.empty() ? data_dir() + "/m24_generators.txt" : o.perm);
  const auto x = leech::m24_element_of_order(code, gens, o.order, o.seed);
  std::string images = "images";
  for (int i : x.images()) images += " " + std::to_string(i);
  r.computed.push_back(images);
  const auto action = leech::action_on_leech(x, basis);
  const auto &p = action.matrix();
  const auto t = tate::tate_free(action);
  r.computed.push_back("h0 = " + t.h0.to_string());
  r.computed.push_back("h1 = " + t.h1.to_string());
  r.assertions.push_back(exact_equal("permutation order", o.order, x.order()));
  r.assertions.push_back(exact_equal("action matrix order", o.order, action.exact_order()));
  r.assertions.push_back(same_text("P^T Gram P = Gram", "true", p.transpose() * basis.gram * p == basis.gram ? "true" : "false"));
  r.assertions.push_back(same_text("code preserved", "true", x.preserves(code) ? "true" : "false"));
  if (o.order % 2 == 1)
    r.assertions.push_back(same_text("H^1(g, Leech) for odd order", "0", t.h1.to_string()));
  return r;
}

VerificationReport run_relations(const Options &o) {
  return worked_relations(o.order, o.prime, table_for(o), o.trunc);
}

} // namespace

int cli_dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Tate cohomology, p-Brauer characters and McKay-Thompson identities", "moonshine"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print the report as JSON");
  app.add_flag("--timing", o.timing, "Include the runtime in the report");

  auto *tate_cmd = app.add_subcommand("tate", "Tate cohomology of a matrix action");
  tate_cmd->add_option("--matrix", o.matrix, "Matrix file ('rows cols' header, then rows)")->required();
  tate_cmd->add_option("-n,--order", o.order, "Order N with g^N = I")->required()->check(CLI::PositiveNumber);
  tate_cmd->add_option("--mod", o.modulus, "Work on Z^r / M instead of Z^r")->check(CLI::PositiveNumber);

  auto *brauer_cmd = app.add_subcommand("brauer-coeffs", "Coefficients a_{k,p} and combination weights");
  brauer_cmd->add_option("-n,--order", o.order, "Order N of g")->required()->check(CLI::Range(2, 100000));
  brauer_cmd->add_option("-p,--prime", o.prime, "Prime factor p of N")->required();
  brauer_cmd->add_flag("--oracle", o.oracle, "Add the inverse-DFT column");

  auto *series_cmd = app.add_subcommand("mt-series", "Expand a McKay-Thompson series");
  series_cmd->add_option("--class", o.class_label, "Class label, e.g. 2B")->required();
  series_cmd->add_option("-n,--order", o.trunc, "Truncation order")->check(CLI::Range(1, 10000));
  series_cmd->add_option("--data", o.data, "Series table file");

  auto *verify_cmd = app.add_subcommand("verify", "Check the order-8 counterexample");
  verify_cmd->add_option("--case", o.case_label, "Case label (8A)");
  verify_cmd->add_option("-n,--order", o.trunc, "Truncation order")->check(CLI::Range(4, 10000));
  verify_cmd->add_option("--data", o.data, "Series table file");

  auto *leech_cmd = app.add_subcommand("leech-h1", "H^1 of an M24 element on the Leech lattice");
  leech_cmd->add_option("-n,--order", o.order, "Element order")->required()->check(CLI::PositiveNumber);
  leech_cmd->add_option("--seed", o.seed, "Search seed");
  leech_cmd->add_option("--perm", o.perm, "Generator file");

  auto *rel_cmd = app.add_subcommand("relations", "Worked combinations for 15A and 21A");
  rel_cmd->add_option("-n,--order", o.order, "Group order (15 or 21)")->required();
  rel_cmd->add_option("-p,--prime", o.prime, "Prime factor p of N")->required();
  rel_cmd->add_option("--trunc", o.trunc, "Truncation order")->check(CLI::Range(1, 10000));
  rel_cmd->add_option("--data", o.data, "Series table file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    if (*tate_cmd) report = run_tate(o);
    else if (*brauer_cmd) report = run_brauer(o);
    else if (*series_cmd) report = run_series(o);
    else if (*verify_cmd) report = run_verify(o);
    else if (*leech_cmd) report = run_leech(o);
    else report = run_relations(o);
    if (o.timing)
      report.runtime_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();

    if (o.json)
      out << report.to_json().dump(2) << '\n';
    else
      out << report.to_text();
    return report.passed() ? 0 : 1;
  } catch (const DataError &e) {
    err << "data error: " << e.what() << '\n';
    return 3;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

} // namespace moonshine
