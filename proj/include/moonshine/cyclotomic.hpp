#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moonshine/arith.hpp"

namespace moonshine::cyc {

/// Integer polynomial, coefficients in increasing degree.
using IntPoly = std::vector<Integer>;

/// Phi_M, by exact division of x^M - 1 by Phi_d over the proper divisors d.
IntPoly cyclotomic_polynomial(std::int64_t modulus);

/// Element of Q(zeta_M) in the power basis 1, zeta, ..., zeta^(phi(M)-1).
class CycNumber {
public:
  CycNumber() : CycNumber(1) {}
  explicit CycNumber(std::int64_t modulus);                   // zero
  CycNumber(std::int64_t modulus, const Rational &constant);  // rational embedded
  CycNumber(std::int64_t modulus, std::vector<Rational> coeffs);

  std::int64_t modulus() const noexcept { return modulus_; }
  const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  CycNumber &operator+=(const CycNumber &other);
  CycNumber &operator-=(const CycNumber &other);
  CycNumber &operator*=(const Rational &s);

  friend CycNumber operator+(CycNumber a, const CycNumber &b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber &b) { return a -= b; }
  friend CycNumber operator-(const CycNumber &a);
  friend CycNumber operator*(const CycNumber &a, const CycNumber &b);
  friend CycNumber operator*(const Rational &s, CycNumber a) { return a *= s; }
  friend bool operator==(const CycNumber &a, const CycNumber &b) = default;

  std::string to_string() const; // e.g. "1/2 - 3*z^2" with z = zeta_M

private:
  std::int64_t modulus_;
  std::vector<Rational> coeffs_;
};

CycNumber cyc_add(const CycNumber &a, const CycNumber &b);
CycNumber cyc_mul(const CycNumber &a, const CycNumber &b);
CycNumber cyc_inv(const CycNumber &a);

/// zeta_M^(k mod M).
CycNumber zeta_power(std::int64_t modulus, std::int64_t k);

/// All powers zeta_M^0 .. zeta_M^(M-1); handy for repeated DFT sums.
std::vector<CycNumber> zeta_power_table(std::int64_t modulus);

/// Embedding Q(zeta_m) -> Q(zeta_M) for m | M (zeta_m = zeta_M^(M/m)).
CycNumber embed(const CycNumber &a, std::int64_t target_modulus);

/// The value as a rational; throws NotRational if a is not in Q.
Rational rational_part(const CycNumber &a);

/// Describes R_p = Z_p[zeta_{N|h|}] with the valuation normalised so that
/// v(1 - zeta_{p^n}) = 1 and v(p) = phi(p^n), where p^n is the p-part of N.
struct RamificationContext {
  std::int64_t p;
  int n_i;                 // multiplicity of p in N
  std::int64_t big_modulus; // N * |h|
  std::int64_t v_p;        // phi(p^n_i)

  RamificationContext(std::int64_t prime, int multiplicity, std::int64_t big_modulus);

  /// Context for an element g of order N and an N-regular h of order h_order.
  static RamificationContext for_orders(std::int64_t order, std::int64_t h_order, std::int64_t prime);
};

/// A valuation value: a non-negative rational or +infinity.
struct Valuation {
  bool infinite = false;
  Rational value;

  static Valuation infinity() { return {true, 0}; }
  friend bool operator==(const Valuation &, const Valuation &) = default;
};

/// v(1 - zeta_t) in the normalisation of `ctx`.
///   t = 1            -> infinity
///   t = p^l, l<=n_i  -> phi(p^n_i) / phi(p^l)
///   t not a p-power  -> 0 (1 - zeta_t is a unit)
/// Throws DomainError when t does not divide the context modulus.
Valuation one_minus_zeta_valuation(std::int64_t t, const RamificationContext &ctx);

} // namespace moonshine::cyc
