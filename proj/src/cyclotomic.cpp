#include "moonshine/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "moonshine/errors.hpp"

namespace moonshine::cyc {

namespace {

IntPoly compute_cyclotomic(std::int64_t m, const std::map<std::int64_t, IntPoly> &known) {
  // x^m - 1
  IntPoly num(static_cast<std::size_t>(m) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (std::int64_t d : divisors(m)) {
    if (d == m) continue;
    const IntPoly &den = known.at(d);
    // Exact division by a monic polynomial.
    const std::size_t dd = den.size() - 1;
    IntPoly quot(num.size() - dd, Integer(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
      const Integer c = num[k + dd];
      quot[k] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const auto &r : num)
      if (r != 0) throw Error("cyclotomic division left a remainder");
    num = std::move(quot);
  }
  return num;
}

const IntPoly &cached_cyclotomic(std::int64_t m) {
  static std::mutex mutex;
  static std::map<std::int64_t, IntPoly> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  for (std::int64_t d : divisors(m))
    if (!cache.contains(d)) cache.emplace(d, compute_cyclotomic(d, cache));
  return cache.at(m);
}

std::size_t degree_of(std::int64_t m) { return static_cast<std::size_t>(euler_phi(m)); }

// Reduce an arbitrary-length rational polynomial modulo Phi_m.
std::vector<Rational> reduce(std::vector<Rational> poly, std::int64_t m) {
  const IntPoly &phi = cached_cyclotomic(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    const Rational c = poly[k];
    if (c == 0) continue;
    // x^k = x^(k-deg) * x^deg and x^deg = -(phi - x^deg)
    for (std::size_t j = 0; j <= deg; ++j) poly[k - deg + j] -= c * phi[j];
  }
  poly.resize(deg, Rational(0));
  return poly;
}

void require_same_modulus(const CycNumber &a, const CycNumber &b) {
  if (a.modulus() != b.modulus())
    throw ModulusMismatch("cyclotomic moduli differ: " + std::to_string(a.modulus()) + " vs " +
                          std::to_string(b.modulus()));
}

} // namespace

IntPoly cyclotomic_polynomial(std::int64_t modulus) {
  if (modulus < 1) throw DomainError("cyclotomic modulus must be positive");
  return cached_cyclotomic(modulus);
}

CycNumber::CycNumber(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 1) throw DomainError("cyclotomic modulus must be positive");
  coeffs_.assign(degree_of(modulus), Rational(0));
}

CycNumber::CycNumber(std::int64_t modulus, const Rational &constant) : CycNumber(modulus) {
  coeffs_[0] = constant;
}

CycNumber::CycNumber(std::int64_t modulus, std::vector<Rational> coeffs) : modulus_(modulus) {
  if (modulus < 1) throw DomainError("cyclotomic modulus must be positive");
  coeffs_ = reduce(std::move(coeffs), modulus);
}

bool CycNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

CycNumber &CycNumber::operator+=(const CycNumber &other) {
  require_same_modulus(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycNumber &CycNumber::operator-=(const CycNumber &other) {
  require_same_modulus(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycNumber &CycNumber::operator*=(const Rational &s) {
  for (auto &c : coeffs_) c *= s;
  return *this;
}

CycNumber operator-(const CycNumber &a) {
  CycNumber out = a;
  for (auto &c : out.coeffs_) c = -c;
  return out;
}

CycNumber operator*(const CycNumber &a, const CycNumber &b) {
  require_same_modulus(a, b);
  const std::size_t n = a.coeffs_.size();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CycNumber(a.modulus_, std::move(prod));
}

std::string CycNumber::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational &c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += k == 1 ? "z" : "z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

CycNumber cyc_add(const CycNumber &a, const CycNumber &b) { return a + b; }

CycNumber cyc_mul(const CycNumber &a, const CycNumber &b) { return a * b; }

CycNumber cyc_inv(const CycNumber &a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(a.modulus()) + ")");
  // Solve (multiplication-by-a matrix) * x = e_0 by Gaussian elimination.
  const std::int64_t m = a.modulus();
  const std::size_t n = a.coeffs().size();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1, Rational(0)));
  CycNumber basis = zeta_power(m, 0);
  const CycNumber z = zeta_power(m, 1);
  for (std::size_t j = 0; j < n; ++j) {
    const CycNumber col = a * basis;
    for (std::size_t i = 0; i < n; ++i) aug[i][j] = col.coeffs()[i];
    basis = basis * z;
  }
  aug[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (aug[piv][c] == 0) ++piv; // the field is a domain, so a pivot exists
    std::swap(aug[piv], aug[c]);
    const Rational inv = 1 / aug[c][c];
    for (auto &x : aug[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const Rational f = aug[r][c];
      for (std::size_t k = c; k <= n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return CycNumber(m, std::move(x));
}

CycNumber zeta_power(std::int64_t modulus, std::int64_t k) {
  if (modulus < 1) throw DomainError("cyclotomic modulus must be positive");
  const auto e = static_cast<std::size_t>(mod_floor(k, modulus));
  std::vector<Rational> mono(e + 1, Rational(0));
  mono[e] = 1;
  return CycNumber(modulus, std::move(mono));
}

std::vector<CycNumber> zeta_power_table(std::int64_t modulus) {
  std::vector<CycNumber> table;
  table.reserve(static_cast<std::size_t>(modulus));
  for (std::int64_t k = 0; k < modulus; ++k) table.push_back(zeta_power(modulus, k));
  return table;
}

CycNumber embed(const CycNumber &a, std::int64_t target_modulus) {
  if (target_modulus % a.modulus() != 0)
    throw ModulusMismatch("cannot embed Q(zeta_" + std::to_string(a.modulus()) + ") into Q(zeta_" +
                          std::to_string(target_modulus) + ")");
  const auto step = static_cast<std::size_t>(target_modulus / a.modulus());
  std::vector<Rational> poly(step * a.coeffs().size() + 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) poly[i * step] = a.coeffs()[i];
  return CycNumber(target_modulus, std::move(poly));
}

Rational rational_part(const CycNumber &a) {
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    if (a.coeffs()[i] != 0) throw NotRational("not rational: " + a.to_string());
  return a.coeffs()[0];
}

RamificationContext::RamificationContext(std::int64_t prime, int multiplicity, std::int64_t modulus)
    : p(prime), n_i(multiplicity), big_modulus(modulus) {
  if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
  if (multiplicity < 1) throw DomainError("p must divide N (multiplicity >= 1)");
  if (modulus < 1 || moonshine::multiplicity(modulus, prime) != multiplicity)
    throw DomainError("context modulus must have p-multiplicity exactly n_i");
  v_p = euler_phi(ipow(prime, multiplicity));
}

RamificationContext RamificationContext::for_orders(std::int64_t order, std::int64_t h_order,
                                                    std::int64_t prime) {
  if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
  if (order < 1 || order % prime != 0)
    throw DomainError(std::to_string(prime) + " does not divide " + std::to_string(order));
  if (h_order < 1 || std::gcd(order, h_order) != 1)
    throw DomainError("h must be N-regular (order coprime to N)");
  return RamificationContext(prime, multiplicity(order, prime), order * h_order);
}

Valuation one_minus_zeta_valuation(std::int64_t t, const RamificationContext &ctx) {
  if (t < 1 || ctx.big_modulus % t != 0)
    throw DomainError(std::to_string(t) + " does not divide the context modulus " +
                      std::to_string(ctx.big_modulus));
  if (t == 1) return Valuation::infinity();
  const int l = multiplicity(t, ctx.p);
  if (ipow(ctx.p, l) != t) return {false, Rational(0)}; // another prime divides t: unit
  if (l > ctx.n_i) throw DomainError("p^l exceeds the p-part of the context");
  Rational v(Integer(ctx.v_p), Integer(euler_phi(t)));
  v.canonicalize();
  return {false, v};
}

} // namespace moonshine::cyc
