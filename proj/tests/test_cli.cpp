#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "moonshine/cli.hpp"
#include "moonshine/report.hpp"

using namespace moonshine;

namespace {

const std::string data_dir = MOONSHINE_TEST_DATA_DIR;
const std::string fixture_dir = MOONSHINE_TEST_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "moonshine");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string &name) {
  auto dir = std::filesystem::temp_directory_path() / ("moonshine_cli_" + name);
  std::filesystem::create_directories(dir);
  return dir;
}

bool has_decimal_point_number(const std::string &s) { return std::regex_search(s, std::regex("[0-9]\\.[0-9]")); }

} // namespace

TEST_CASE("verify --case 8A") {
  const auto r = run({"verify", "--case", "8A"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-256") != std::string::npos);
  CHECK(r.out.find("result: PASS") != std::string::npos);
  CHECK(!has_decimal_point_number(r.out));
  CHECK(run({"verify", "--case", "8A", "--order", "6"}).code == 0);
}

TEST_CASE("brauer-coeffs with the oracle column") {
  const auto r = run({"brauer-coeffs", "--order", "15", "--prime", "3", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("  k gcd a_k oracle\n") != std::string::npos);
  CHECK(r.out.find("  1 1 1/10 1/10\n") != std::string::npos);
  CHECK(r.out.find("  3 3 0 0\n") != std::string::npos);
  std::istringstream lines(r.out);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    std::istringstream ss(line);
    std::string k, g, a, b;
    if (ss >> k >> g >> a >> b && std::isdigit(static_cast<unsigned char>(k[0]))) {
      ++rows;
      CHECK(a == b);
    }
  }
  CHECK(rows == 14);
}

TEST_CASE("tate on a fixture matrix") {
  const auto r = run({"tate", "--matrix", fixture_dir + "/id2.txt", "--order", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("h0 = Z/2 + Z/2\n") != std::string::npos);
  CHECK(r.out.find("h1 = 0\n") != std::string::npos);

  const auto s = run({"tate", "--matrix", fixture_dir + "/neg1.txt", "--order", "2", "--mod", "4"});
  CHECK(s.code == 0);
  CHECK(s.out.find("h0 = Z/2\n") != std::string::npos);
  CHECK(s.out.find("h1 = Z/2\n") != std::string::npos);

  // Z[C_2] is free: everything vanishes, also mod 4.
  const auto f = run({"tate", "--matrix", fixture_dir + "/swap2.txt", "--order", "2", "--mod", "4"});
  CHECK(f.out.find("  h0 = 0\n  h1 = 0\n") != std::string::npos);
}

TEST_CASE("mt-series, relations and leech-h1") {
  const auto s = run({"mt-series", "--class", "2B", "--order", "3"});
  CHECK(s.code == 0);
  CHECK(s.out.find("T_2B = q^-1 + 276*q - 2048*q^2 + O(q^3)") != std::string::npos);

  const auto rel = run({"relations", "--order", "15", "--prime", "3"});
  CHECK(rel.code == 0);
  CHECK(rel.out.find("(4/5, 0, 1/5)") != std::string::npos);
  CHECK(rel.out.find("[CITED]") != std::string::npos);
  CHECK(!has_decimal_point_number(rel.out));

  const auto l = run({"leech-h1", "--order", "15", "--seed", "4"});
  CHECK(l.code == 0);
  CHECK(l.out.find("h1 = 0") != std::string::npos);
  CHECK(l.out.find("[PASS] P^T Gram P = Gram") != std::string::npos);
}

TEST_CASE("identical inputs give byte-identical output") {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"verify", "--case", "8A"},
           {"leech-h1", "--order", "21", "--seed", "9"},
           {"relations", "--order", "21", "--prime", "7", "--json"},
           {"brauer-coeffs", "--order", "12", "--prime", "2", "--oracle", "--json"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("--json output round-trips") {
  const auto r = run({"verify", "--case", "8A", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("case") == "8A");
  CHECK(j.at("pass") == true);
  const auto report = VerificationReport::from_json(j);
  CHECK(report.to_json().dump(2) + "\n" == r.out);
  CHECK(!j.contains("runtime_us"));
  CHECK(nlohmann::json::parse(run({"--json", "verify", "--timing"}).out).contains("runtime_us"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--case", "99Z"}).code == 2);
  CHECK(run({"brauer-coeffs", "--order", "15", "--prime", "2"}).code == 2);
  CHECK(run({"tate", "--order", "2"}).code == 2);
  CHECK(run({"tate", "--matrix", fixture_dir + "/nope.txt", "--order", "2"}).code == 3);
  CHECK(run({"tate", "--matrix", fixture_dir + "/swap2.txt", "--order", "3"}).code == 3);
  CHECK(run({"mt-series", "--class", "99Z"}).code == 3);
  CHECK(run({"verify", "--data", fixture_dir + "/missing.txt"}).code == 3);
  CHECK(run({"--help"}).code == 0);

  const auto dir = scratch_dir("exit");
  {
    std::ofstream bad(dir / "bad.txt");
    bad << "CLASS 8A COEFFS 1 0 x\n";
  }
  const auto parse = run({"verify", "--data", (dir / "bad.txt").string()});
  CHECK(parse.code == 3);
  CHECK(parse.err.find("line 1") != std::string::npos);

  {
    // Power map pointing g^2 and g^4 at the wrong classes: the q^2 check fails.
    std::ofstream wrong(dir / "wrong.txt");
    wrong << "CLASS 8A COEFFS 1 0 36 128 386\nCLASS 4C COEFFS 1 0 20 0 -62\nCLASS 2B COEFFS 1 0 276 -2048 11202\n"
             "POWER 8A 2 2B\nPOWER 8A 4 4C\n";
  }
  const auto fail = run({"verify", "--data", (dir / "wrong.txt").string(), "--order", "4"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("[FAIL]") != std::string::npos);
}

TEST_CASE("MOONSHINE_DATA_DIR overrides the bundled data") {
  const auto dir = scratch_dir("env");
  {
    std::ofstream t(dir / "mt_series.txt");
    t << "CLASS 2B COEFFS 1 0 999\n";
  }
  ::setenv("MOONSHINE_DATA_DIR", dir.c_str(), 1);
  const auto r = run({"mt-series", "--class", "2B", "--order", "2"});
  ::unsetenv("MOONSHINE_DATA_DIR");
  CHECK(r.code == 0);
  CHECK(r.out.find("999*q") != std::string::npos);
  CHECK(run({"mt-series", "--class", "2B", "--order", "2"}).out.find("276*q") != std::string::npos);
}
