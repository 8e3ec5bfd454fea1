#include "moonshine/qseries.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "moonshine/errors.hpp"

namespace moonshine::qseries {

LaurentQSeries::LaurentQSeries(std::int64_t start, std::vector<Rational> coeffs, std::int64_t order)
    : start_(start), coeffs_(std::move(coeffs)), order_(order) {
  const std::int64_t len = std::max<std::int64_t>(0, order_ - start_);
  coeffs_.resize(static_cast<std::size_t>(len), Rational(0));
}

LaurentQSeries LaurentQSeries::constant(const Rational &c, std::int64_t order) {
  return LaurentQSeries(0, {c}, order);
}

LaurentQSeries LaurentQSeries::monomial(std::int64_t exponent, std::int64_t order) {
  return LaurentQSeries(exponent, {Rational(1)}, order);
}

Rational LaurentQSeries::coeff(std::int64_t n) const {
  if (n >= order_)
    throw DomainError("coefficient of q^" + std::to_string(n) + " is beyond O(q^" + std::to_string(order_) + ")");
  if (n < start_) return 0;
  return coeffs_[static_cast<std::size_t>(n - start_)];
}

std::optional<std::int64_t> LaurentQSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return start_ + static_cast<std::int64_t>(i);
  return std::nullopt;
}

LaurentQSeries LaurentQSeries::truncated(std::int64_t new_order) const {
  if (new_order > order_) throw DomainError("cannot extend a truncated series");
  return LaurentQSeries(start_, coeffs_, new_order);
}

LaurentQSeries &LaurentQSeries::operator+=(const LaurentQSeries &other) {
  const std::int64_t s = std::min(start_, other.start_);
  const std::int64_t o = std::min(order_, other.order_);
  std::vector<Rational> c(static_cast<std::size_t>(std::max<std::int64_t>(0, o - s)));
  for (std::int64_t n = s; n < o; ++n) c[static_cast<std::size_t>(n - s)] = coeff(n) + other.coeff(n);
  *this = LaurentQSeries(s, std::move(c), o);
  return *this;
}

LaurentQSeries &LaurentQSeries::operator-=(const LaurentQSeries &other) {
  return *this += Rational(-1) * other;
}

LaurentQSeries &LaurentQSeries::operator*=(const Rational &s) {
  for (auto &c : coeffs_) c *= s;
  return *this;
}

LaurentQSeries operator*(const LaurentQSeries &a, const LaurentQSeries &b) {
  const std::int64_t va = a.valuation().value_or(a.order());
  const std::int64_t vb = b.valuation().value_or(b.order());
  const std::int64_t order = std::min(va + b.order(), vb + a.order());
  const std::int64_t start = a.start() + b.start();
  std::vector<Rational> c(static_cast<std::size_t>(std::max<std::int64_t>(0, order - start)));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size() && i + j < c.size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return LaurentQSeries(start, std::move(c), order);
}

bool operator==(const LaurentQSeries &a, const LaurentQSeries &b) {
  if (a.order() != b.order()) return false;
  for (std::int64_t n = std::min(a.start(), b.start()); n < a.order(); ++n)
    if (a.coeff(n) != b.coeff(n)) return false;
  return true;
}

std::string LaurentQSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational &c = coeffs_[i];
    if (c == 0) continue;
    const std::int64_t n = start_ + static_cast<std::int64_t>(i);
    const Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (n == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += n == 1 ? "q" : "q^" + std::to_string(n);
  }
  const std::string tail = order_ == 0 ? "O(1)" : order_ == 1 ? "O(q)" : "O(q^" + std::to_string(order_) + ")";
  return out.empty() ? tail : out + " + " + tail;
}

LaurentQSeries shift(const LaurentQSeries &s, std::int64_t k) {
  return LaurentQSeries(s.start() + k, s.coeffs(), s.order() + k);
}

LaurentQSeries invert(const LaurentQSeries &s) {
  const auto v = s.valuation();
  if (!v) throw DivisionByZero("series has no known nonzero coefficient");
  const std::int64_t rel = s.order() - *v;
  const Rational a0 = s.coeff(*v);
  std::vector<Rational> b(static_cast<std::size_t>(rel));
  b[0] = 1 / a0;
  for (std::int64_t k = 1; k < rel; ++k) {
    Rational acc = 0;
    for (std::int64_t j = 1; j <= k; ++j) {
      const Rational aj = s.coeff(*v + j);
      if (aj != 0) acc += aj * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = -acc / a0;
  }
  return LaurentQSeries(-*v, std::move(b), -*v + rel);
}

LaurentQSeries power(const LaurentQSeries &s, std::int64_t e) {
  const auto v = s.valuation();
  if (!v) {
    if (e <= 0) throw DivisionByZero("non-positive power of a series with no known nonzero coefficient");
    LaurentQSeries r = s;
    for (std::int64_t i = 1; i < e; ++i) r = r * s;
    return r;
  }
  const std::int64_t rel = s.order() - *v;
  std::vector<Rational> a(static_cast<std::size_t>(rel));
  for (std::int64_t j = 0; j < rel; ++j) a[static_cast<std::size_t>(j)] = s.coeff(*v + j);

  // (sum a_j q^j)^e by the recurrence n a_0 b_n = sum_k ((e+1)k - n) a_k b_{n-k}.
  std::vector<Rational> b(static_cast<std::size_t>(rel));
  Rational b0 = 1;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) b0 *= a[0];
  b[0] = e < 0 ? 1 / b0 : b0;
  for (std::int64_t n = 1; n < rel; ++n) {
    Rational acc = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
      const Rational &ak = a[static_cast<std::size_t>(k)];
      if (ak != 0) acc += ((e + 1) * k - n) * ak * b[static_cast<std::size_t>(n - k)];
    }
    b[static_cast<std::size_t>(n)] = acc / (n * a[0]);
  }
  return LaurentQSeries(e * *v, std::move(b), e * *v + rel);
}

namespace {

// prod_{n >= 1} (1 - q^(d n)) + O(q^order)
LaurentQSeries dilated_euler(std::int64_t d, std::int64_t order) {
  std::vector<Rational> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (std::int64_t step = d; step < order; step += d)
    for (std::int64_t i = order - 1; i >= step; --i)
      c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - step)];
  return LaurentQSeries(0, std::move(c), order);
}

} // namespace

LaurentQSeries euler_product(std::int64_t order) {
  if (order < 1) throw DomainError("euler_product needs order >= 1");
  return dilated_euler(1, order);
}

LaurentQSeries eta_quotient_series(const EtaQuotientSpec &spec, std::int64_t order) {
  std::int64_t weight = 0;
  for (const auto &f : spec.factors) {
    if (f.divisor < 1) throw DomainError("eta divisor must be positive");
    weight += f.divisor * f.exponent;
  }
  if (weight % 24 != 0)
    throw Mod24Error("sum of d*e is " + std::to_string(weight) + ", not divisible by 24");
  const std::int64_t lead = weight / 24;
  const std::int64_t need = std::max<std::int64_t>(1, order - lead);

  LaurentQSeries product = LaurentQSeries::constant(1, need);
  for (const auto &f : spec.factors)
    if (f.exponent != 0) product = product * power(dilated_euler(f.divisor, need), f.exponent);
  LaurentQSeries out = shift(product, lead);
  if (out.order() > order) out = out.truncated(order);
  return out + LaurentQSeries::constant(spec.constant, order);
}

LaurentQSeries series_combine(const std::vector<std::pair<LaurentQSeries, Rational>> &terms) {
  if (terms.empty()) throw DomainError("series_combine needs at least one term");
  LaurentQSeries sum = terms.front().second * terms.front().first;
  for (std::size_t i = 1; i < terms.size(); ++i) sum += terms[i].second * terms[i].first;
  return sum;
}

LaurentQSeries tau_half_shift(const LaurentQSeries &s) {
  std::vector<Rational> c = s.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (mod_floor(s.start() + static_cast<std::int64_t>(i), 2) == 1) c[i] = -c[i];
  return LaurentQSeries(s.start(), std::move(c), s.order());
}

SplitSeries h0_h1_split(const LaurentQSeries &t, SplitKind kind, const std::optional<LaurentQSeries> &t_sigma) {
  const Rational half(1, 2);
  switch (kind) {
  case SplitKind::FrickePrime:
    return {t, LaurentQSeries(t.start(), {}, t.order())};
  case SplitKind::TwoB: {
    const auto shifted = tau_half_shift(t);
    return {half * (t + shifted), half * (shifted - t)};
  }
  case SplitKind::PBWithSigma:
    if (!t_sigma) throw MissingSigma("pB split needs the series of g h sigma");
    return {half * (t + *t_sigma), half * (*t_sigma - t)};
  }
  throw DomainError("unknown split kind");
}

void MTTable::add_class(const std::string &label, ClassEntry entry) {
  if (classes_.count(label)) throw DataError("duplicate class " + label);
  classes_.emplace(label, std::move(entry));
  order_.push_back(label);
}

void MTTable::add_power(const std::string &label, std::int64_t d, const std::string &target) {
  const auto [it, inserted] = powers_.emplace(std::make_pair(label, d), target);
  if (!inserted && it->second != target)
    throw DataError("conflicting power map entries for " + label + "^" + std::to_string(d));
}

const ClassEntry &MTTable::entry(const std::string &label) const {
  const auto it = classes_.find(label);
  if (it == classes_.end()) throw UnknownClass("unknown class " + label);
  return it->second;
}

std::string MTTable::power_class(const std::string &label, std::int64_t d) const {
  if (d == 1) return label;
  const auto it = powers_.find({label, d});
  if (it == powers_.end()) throw UnknownClass("no power map entry for " + label + "^" + std::to_string(d));
  return it->second;
}

namespace {

std::int64_t parse_int(const std::string &tok, int line) {
  std::int64_t v = 0;
  const char *first = tok.data();
  if (!tok.empty() && tok[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("not an integer: '" + tok + "'", line);
  return v;
}

Rational parse_rat(const std::string &tok, int line) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument &) {
    throw ParseError("not a rational: '" + tok + "'", line);
  }
}

} // namespace

MTTable parse_mt_table(std::istream &in) {
  MTTable table;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ss(text);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;

    try {
      if (tok[0] == "CLASS") {
        if (tok.size() < 3) throw ParseError("CLASS needs a label and a body", line);
        const std::string &label = tok[1];
        if (tok[2] == "COEFFS") {
          if (tok.size() < 4) throw ParseError("COEFFS needs at least one coefficient", line);
          CoeffList list;
          for (std::size_t i = 3; i < tok.size(); ++i) list.coeffs.push_back(parse_rat(tok[i], line));
          table.add_class(label, list);
        } else if (tok[2] == "CONST") {
          if (tok.size() < 5 || tok[4] != "ETA") throw ParseError("expected CONST <c> ETA <d>:<e> ...", line);
          EtaQuotientSpec spec;
          spec.constant = parse_rat(tok[3], line);
          for (std::size_t i = 5; i < tok.size(); ++i) {
            const auto colon = tok[i].find(':');
            if (colon == std::string::npos) throw ParseError("eta factor must be d:e, got '" + tok[i] + "'", line);
            const auto d = parse_int(tok[i].substr(0, colon), line);
            const auto e = parse_int(tok[i].substr(colon + 1), line);
            if (d < 1) throw ParseError("eta divisor must be positive", line);
            spec.factors.push_back({d, e});
          }
          table.add_class(label, spec);
        } else {
          throw ParseError("expected COEFFS or CONST after the class label", line);
        }
      } else if (tok[0] == "POWER") {
        if (tok.size() != 4) throw ParseError("expected POWER <label> <d> <label>", line);
        const auto d = parse_int(tok[2], line);
        if (d < 1) throw ParseError("power must be positive", line);
        table.add_power(tok[1], d, tok[3]);
      } else {
        throw ParseError("unknown record '" + tok[0] + "'", line);
      }
    } catch (const ParseError &) {
      throw;
    } catch (const DataError &e) {
      throw ParseError(e.what(), line);
    }
  }
  return table;
}

MTTable load_mt_table(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open series table '" + path + "'");
  return parse_mt_table(in);
}

std::string emit_mt_table(const MTTable &table) {
  std::ostringstream out;
  for (const auto &label : table.labels()) {
    out << "CLASS " << label;
    if (const auto *spec = std::get_if<EtaQuotientSpec>(&table.entry(label))) {
      out << " CONST " << to_string(spec->constant) << " ETA";
      for (const auto &f : spec->factors) out << ' ' << f.divisor << ':' << f.exponent;
    } else {
      out << " COEFFS";
      for (const auto &c : std::get<CoeffList>(table.entry(label)).coeffs) out << ' ' << to_string(c);
    }
    out << '\n';
  }
  for (const auto &[key, target] : table.power_map())
    out << "POWER " << key.first << ' ' << key.second << ' ' << target << '\n';
  return out.str();
}

LaurentQSeries mckay_thompson(const MTTable &table, const std::string &label, std::int64_t order) {
  if (order < 1) throw DomainError("McKay-Thompson series need order >= 1");
  const ClassEntry &entry = table.entry(label);
  LaurentQSeries s;
  if (const auto *spec = std::get_if<EtaQuotientSpec>(&entry)) {
    s = eta_quotient_series(*spec, order);
  } else {
    const auto &c = std::get<CoeffList>(entry).coeffs;
    const auto available = static_cast<std::int64_t>(c.size()) - 1;
    const std::int64_t o = std::min(order, available);
    s = LaurentQSeries(-1, std::vector<Rational>(c.begin(), c.begin() + (o + 1)), o);
  }
  if (s.order() < 1) throw NormalizationError(label + ": constant term is not known");
  if (s.valuation() != -1 || s.coeff(-1) != 1)
    throw NormalizationError(label + ": leading term is not q^-1, got " + s.to_string());
  if (s.coeff(0) != 0) throw NormalizationError(label + ": constant term is " + to_string(s.coeff(0)) + ", not 0");
  return s;
}

} // namespace moonshine::qseries
