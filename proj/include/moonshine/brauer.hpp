#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "moonshine/cyclotomic.hpp"

namespace moonshine::brauer {

using cyc::CycNumber;
using cyc::RamificationContext;

/// One entry of a composition series: h acts on the simple factor by
/// zeta_|h|^eigen_exponent, and it occurs `multiplicity` times.
struct CompositionFactor {
  std::int64_t eigen_exponent;
  std::int64_t multiplicity;
};

/// Finite-length module over a valuation ring with an action of h, recorded
/// only through its Jordan-Hoelder data. `v_p` is v(p) in the ring the
/// module lives over; it starts at the context's phi(p^n_i) and is scaled by
/// the ramification index under base change.
struct TorsionCycModule {
  RamificationContext ctx;
  std::int64_t h_order = 1;
  std::int64_t v_p = 1;
  std::vector<CompositionFactor> factors;

  TorsionCycModule(RamificationContext context, std::int64_t h_order,
                   std::vector<CompositionFactor> factors = {});

  std::int64_t length() const;
};

/// (1/v(p)) * sum over composition factors of zeta_|h|^m; lives in Q(zeta_|h|).
CycNumber p_brauer_character(const TorsionCycModule &module);

/// Direct sum (concatenated composition factors).
TorsionCycModule direct_sum(const TorsionCycModule &a, const TorsionCycModule &b);

/// Character of A + B equals the sum of the characters.
bool additivity_check(const TorsionCycModule &a, const TorsionCycModule &b);

/// Tensoring up to an extension with ramification index e: every factor
/// splits into e isomorphic factors and v(p) is multiplied by e.
TorsionCycModule base_change(const TorsionCycModule &module, std::int64_t e);

/// Character of H^0 minus character of H^1 for R_{n,m}, assembled from
/// tate::rnm_cohomology and p_brauer_character.
CycNumber super_brauer_rnm(std::int64_t order, std::int64_t n, std::int64_t m, std::int64_t p,
                           std::int64_t h_order = 1);

/// a_{k,p} for k = 1 .. N-1.
struct CoeffTable {
  std::int64_t order;
  std::int64_t p;
  std::map<std::int64_t, Rational> entries;

  friend bool operator==(const CoeffTable &, const CoeffTable &) = default;
};

/// Closed form: with p^n || N and gcd(k, p^n) = p^l,
///   a_k = (n - l - (n - l - 1)/p) / sum_{d | N, p not | d} phi(N/d)   (l < n)
///   a_k = 0                                                         (l = n)
CoeffTable coeff_closed_form(std::int64_t order, std::int64_t p);

/// The same table through the inverse discrete Fourier transform
///   a_k = (1/N) sum_b super_brauer_rnm(N, b, 0, p) * zeta_N^(-k b)
/// evaluated in exact cyclotomic arithmetic.
CoeffTable coeff_dft_oracle(std::int64_t order, std::int64_t p);

struct CombinationTerm {
  std::int64_t divisor; // d: the term is weight * T_{g^d h}
  Rational weight;      // a_{d,p} * phi(N/d)

  bool is_zero() const { return weight == 0; }
  friend bool operator==(const CombinationTerm &, const CombinationTerm &) = default;
};

/// Weights of the Hauptmodul combination over the proper divisors d of N,
/// zero-weight rows kept.
std::vector<CombinationTerm> hauptmodul_combination(std::int64_t order, std::int64_t p);

} // namespace moonshine::brauer
