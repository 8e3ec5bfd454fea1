#include "moonshine/brauer.hpp"

#include <numeric>

#include "moonshine/errors.hpp"
#include "moonshine/tate.hpp"

namespace moonshine::brauer {

namespace {

void require_prime_factor(std::int64_t order, std::int64_t p) {
  if (order < 2 || !is_prime(p) || order % p != 0)
    throw NotAFactor(std::to_string(p) + " is not a prime factor of " + std::to_string(order));
}

} // namespace

TorsionCycModule::TorsionCycModule(RamificationContext context, std::int64_t h, std::vector<CompositionFactor> fs)
    : ctx(context), h_order(h), v_p(context.v_p), factors(std::move(fs)) {
  if (h_order < 1) throw DomainError("|h| must be positive");
  for (const auto &f : factors)
    if (f.multiplicity < 1) throw DomainError("composition factor multiplicities must be positive");
}

std::int64_t TorsionCycModule::length() const {
  std::int64_t n = 0;
  for (const auto &f : factors) n += f.multiplicity;
  return n;
}

CycNumber p_brauer_character(const TorsionCycModule &module) {
  CycNumber sum(module.h_order);
  for (const auto &f : module.factors) {
    CycNumber term = cyc::zeta_power(module.h_order, f.eigen_exponent);
    term *= Rational(f.multiplicity);
    sum += term;
  }
  sum *= Rational(1, module.v_p);
  return sum;
}

TorsionCycModule direct_sum(const TorsionCycModule &a, const TorsionCycModule &b) {
  if (a.h_order != b.h_order || a.v_p != b.v_p || a.ctx.p != b.ctx.p)
    throw DomainError("direct sum of modules over different rings");
  TorsionCycModule out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

bool additivity_check(const TorsionCycModule &a, const TorsionCycModule &b) {
  return p_brauer_character(direct_sum(a, b)) == p_brauer_character(a) + p_brauer_character(b);
}

TorsionCycModule base_change(const TorsionCycModule &module, std::int64_t e) {
  if (e < 1) throw DomainError("ramification index must be positive");
  TorsionCycModule out = module;
  out.v_p *= e;
  for (auto &f : out.factors) f.multiplicity *= e;
  return out;
}

CycNumber super_brauer_rnm(std::int64_t order, std::int64_t n, std::int64_t m, std::int64_t p,
                           std::int64_t h_order) {
  require_prime_factor(order, p);
  const auto ctx = RamificationContext::for_orders(order, h_order, p);
  const auto coh = tate::rnm_cohomology(order, n, m, ctx);
  auto module_of_length = [&](std::int64_t length) {
    std::vector<CompositionFactor> fs;
    if (length > 0) fs.push_back({coh.eigen_exponent, length});
    return TorsionCycModule(ctx, h_order, std::move(fs));
  };
  return p_brauer_character(module_of_length(coh.h0_length)) -
         p_brauer_character(module_of_length(coh.h1_length));
}

CoeffTable coeff_closed_form(std::int64_t order, std::int64_t p) {
  require_prime_factor(order, p);
  const int n = multiplicity(order, p);
  std::int64_t denom = 0;
  for (auto d : divisors(order))
    if (d % p != 0) denom += euler_phi(order / d);

  CoeffTable table{order, p, {}};
  for (std::int64_t k = 1; k < order; ++k) {
    const int l = std::min(multiplicity(k, p), n);
    if (l == n) {
      table.entries[k] = 0;
      continue;
    }
    Rational a = Rational(n - l) - Rational(n - l - 1, p);
    a /= denom;
    a.canonicalize();
    table.entries[k] = a;
  }
  return table;
}

CoeffTable coeff_dft_oracle(std::int64_t order, std::int64_t p) {
  require_prime_factor(order, p);
  const auto zeta = cyc::zeta_power_table(order);
  std::vector<Rational> character(static_cast<std::size_t>(order));
  for (std::int64_t b = 0; b < order; ++b)
    character[static_cast<std::size_t>(b)] = cyc::rational_part(super_brauer_rnm(order, b, 0, p));

  CoeffTable table{order, p, {}};
  for (std::int64_t k = 1; k < order; ++k) {
    CycNumber acc(order);
    for (std::int64_t b = 0; b < order; ++b) {
      const Rational &c = character[static_cast<std::size_t>(b)];
      if (c == 0) continue;
      acc += c * zeta[static_cast<std::size_t>(mod_floor(-k * b, order))];
    }
    table.entries[k] = cyc::rational_part(acc) / order;
  }
  return table;
}

std::vector<CombinationTerm> hauptmodul_combination(std::int64_t order, std::int64_t p) {
  const auto table = coeff_closed_form(order, p);
  std::vector<CombinationTerm> terms;
  for (auto d : divisors(order)) {
    if (d == order) continue;
    Rational w = table.entries.at(d) * euler_phi(order / d);
    w.canonicalize();
    terms.push_back({d, w});
  }
  return terms;
}

} // namespace moonshine::brauer
