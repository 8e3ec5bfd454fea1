#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "moonshine/arith.hpp"

namespace moonshine::qseries {

/// Truncated Laurent series sum_{n >= start} c_n q^n + O(q^order).
/// Coefficients are stored for every exponent start .. order-1; anything at
/// or past `order` is unknown and coeff() refuses to report it.
class LaurentQSeries {
public:
  LaurentQSeries() = default;
  LaurentQSeries(std::int64_t start, std::vector<Rational> coeffs, std::int64_t order);

  /// The constant c + O(q^order).
  static LaurentQSeries constant(const Rational &c, std::int64_t order);
  /// q^exponent + O(q^order).
  static LaurentQSeries monomial(std::int64_t exponent, std::int64_t order);

  std::int64_t start() const noexcept { return start_; }
  std::int64_t order() const noexcept { return order_; }
  const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

  /// c_n; zero below start, DomainError at or beyond the truncation order.
  Rational coeff(std::int64_t n) const;

  /// Exponent of the first nonzero coefficient, or nullopt if none is known.
  std::optional<std::int64_t> valuation() const;

  /// Same series, valid only below new_order (<= order()).
  LaurentQSeries truncated(std::int64_t new_order) const;

  LaurentQSeries &operator+=(const LaurentQSeries &other);
  LaurentQSeries &operator-=(const LaurentQSeries &other);
  LaurentQSeries &operator*=(const Rational &s);

  friend LaurentQSeries operator+(LaurentQSeries a, const LaurentQSeries &b) { return a += b; }
  friend LaurentQSeries operator-(LaurentQSeries a, const LaurentQSeries &b) { return a -= b; }
  friend LaurentQSeries operator*(const Rational &s, LaurentQSeries a) { return a *= s; }
  friend LaurentQSeries operator*(const LaurentQSeries &a, const LaurentQSeries &b);

  /// Equal known coefficients and equal truncation order.
  friend bool operator==(const LaurentQSeries &a, const LaurentQSeries &b);

  /// "q^-1 + 276*q - 2048*q^2 + O(q^3)".
  std::string to_string() const;

private:
  std::int64_t start_ = 0;
  std::vector<Rational> coeffs_;
  std::int64_t order_ = 0;
};

/// Multiplication by q^k.
LaurentQSeries shift(const LaurentQSeries &s, std::int64_t k);

/// 1/s. The leading coefficient must be known and nonzero (DivisionByZero).
LaurentQSeries invert(const LaurentQSeries &s);

/// s^e for any integer e.
LaurentQSeries power(const LaurentQSeries &s, std::int64_t e);

/// prod_{n >= 1} (1 - q^n) + O(q^order).
LaurentQSeries euler_product(std::int64_t order);

struct EtaFactor {
  std::int64_t divisor;
  std::int64_t exponent;
  friend bool operator==(const EtaFactor &, const EtaFactor &) = default;
};

/// prod eta(d tau)^e + constant.
struct EtaQuotientSpec {
  std::vector<EtaFactor> factors;
  Rational constant;
  friend bool operator==(const EtaQuotientSpec &, const EtaQuotientSpec &) = default;
};

/// q^(sum d e / 24) prod_d prod_n (1 - q^(d n))^e + constant, valid below
/// `order`. Throws Mod24Error when sum d e is not divisible by 24.
LaurentQSeries eta_quotient_series(const EtaQuotientSpec &spec, std::int64_t order);

/// sum of weight * series; the truncation is the smallest one among the terms.
LaurentQSeries series_combine(const std::vector<std::pair<LaurentQSeries, Rational>> &terms);

/// tau -> tau + 1/2, i.e. c_n -> (-1)^n c_n.
LaurentQSeries tau_half_shift(const LaurentQSeries &s);

enum class SplitKind { FrickePrime, TwoB, PBWithSigma };

struct SplitSeries {
  LaurentQSeries h0;
  LaurentQSeries h1;
};

/// Graded characters of H^0 and H^1 from T = T_gh:
///   FrickePrime: (T, 0)
///   TwoB:        ((T + T(tau+1/2))/2, (-T + T(tau+1/2))/2)
///   PBWithSigma: ((T + T_sigma)/2, (-T + T_sigma)/2)   (MissingSigma without T_sigma)
SplitSeries h0_h1_split(const LaurentQSeries &t, SplitKind kind,
                        const std::optional<LaurentQSeries> &t_sigma = std::nullopt);

/// Raw coefficients c_-1, c_0, c_1, ...
struct CoeffList {
  std::vector<Rational> coeffs;
  friend bool operator==(const CoeffList &, const CoeffList &) = default;
};

using ClassEntry = std::variant<EtaQuotientSpec, CoeffList>;

class MTTable {
public:
  /// Throws DataError on a duplicate label.
  void add_class(const std::string &label, ClassEntry entry);
  void add_power(const std::string &label, std::int64_t d, const std::string &target);

  bool contains(const std::string &label) const { return classes_.count(label) != 0; }
  const ClassEntry &entry(const std::string &label) const; // UnknownClass

  /// Label of g^d for g in class `label`; UnknownClass if the map has no entry.
  /// d = 1 gives the label itself.
  std::string power_class(const std::string &label, std::int64_t d) const;

  /// Labels in file order.
  const std::vector<std::string> &labels() const noexcept { return order_; }
  const std::map<std::pair<std::string, std::int64_t>, std::string> &power_map() const noexcept {
    return powers_;
  }

  friend bool operator==(const MTTable &, const MTTable &) = default;

private:
  std::map<std::string, ClassEntry> classes_;
  std::vector<std::string> order_;
  std::map<std::pair<std::string, std::int64_t>, std::string> powers_;
};

/// Parses the line format
///   CLASS <label> CONST <rational> ETA <d>:<e> ...
///   CLASS <label> COEFFS <c_-1> <c_0> ...
///   POWER <label> <d> <label>
/// with '#' comments. Throws ParseError carrying the line number.
MTTable parse_mt_table(std::istream &in);
MTTable load_mt_table(const std::string &path);

/// Writes the table back in the same format.
std::string emit_mt_table(const MTTable &table);

/// The series of a class, valid below `order` (>= 1). Raw-coefficient
/// entries that are too short are truncated to what they provide. Throws
/// NormalizationError unless the series is q^-1 + 0 + O(q).
LaurentQSeries mckay_thompson(const MTTable &table, const std::string &label, std::int64_t order);

} // namespace moonshine::qseries
