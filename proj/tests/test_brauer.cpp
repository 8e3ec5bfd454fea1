#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "moonshine/brauer.hpp"
#include "moonshine/errors.hpp"

using namespace moonshine;
using namespace moonshine::brauer;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// Super character written down directly from the order of g^n, evaluated
// in floating point; shares nothing with the tate/cyclotomic code paths.
double bch_float(std::int64_t order, std::int64_t n, std::int64_t p) {
  std::int64_t pn = 1;
  int ni = 0;
  for (std::int64_t x = order; x % p == 0; x /= p) {
    pn *= p;
    ++ni;
  }
  if (n % order == 0) return ni;
  const std::int64_t t = order / std::gcd(n % order, order);
  std::int64_t pl = 1;
  while (pl < t && t % (pl * p) == 0) pl *= p;
  if (pl != t) return 0.0;
  return -1.0 / static_cast<double>(pl - pl / p);
}

double dft_float(std::int64_t order, std::int64_t k, std::int64_t p) {
  const double pi = std::acos(-1.0);
  std::complex<double> acc = 0;
  for (std::int64_t b = 0; b < order; ++b)
    acc += bch_float(order, b, p) * std::polar(1.0, -2.0 * pi * static_cast<double>(k * b) / order);
  return acc.real() / order;
}

double to_double(const Rational &r) { return r.get_d(); }

TorsionCycModule random_module(std::mt19937_64 &rng, const RamificationContext &ctx, std::int64_t h) {
  std::uniform_int_distribution<std::int64_t> len(0, 4), mult(1, 5), ex(0, h - 1);
  std::vector<CompositionFactor> fs;
  const auto n = len(rng);
  for (std::int64_t i = 0; i < n; ++i) fs.push_back({ex(rng), mult(rng)});
  return TorsionCycModule(ctx, h, fs);
}

} // namespace

TEST_CASE("p_brauer_character examples") {
  const auto ctx8 = RamificationContext::for_orders(8, 1, 2);
  CHECK(p_brauer_character(TorsionCycModule(ctx8, 1)).is_zero());
  CHECK(p_brauer_character(TorsionCycModule(ctx8, 1, {{0, 12}})) == CycNumber(1, 3));

  const RamificationContext ctx3(3, 1, 6);
  CHECK(p_brauer_character(TorsionCycModule(ctx3, 2, {{1, 1}})) == CycNumber(2, q(-1, 2)));

  CHECK_THROWS_AS(TorsionCycModule(ctx8, 1, {{0, 0}}), DomainError);
}

TEST_CASE("p_brauer_character is linear in zeta^m and ignores factor order") {
  const auto ctx = RamificationContext::for_orders(4, 5, 2);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_module(rng, ctx, 5);
    CycNumber expected(5);
    for (const auto &f : m.factors) expected += q(f.multiplicity, ctx.v_p) * cyc::zeta_power(5, f.eigen_exponent);
    CHECK(p_brauer_character(m) == expected);
    const auto before = p_brauer_character(m);
    std::shuffle(m.factors.begin(), m.factors.end(), rng);
    CHECK(p_brauer_character(m) == before);
  }
}

TEST_CASE("additivity") {
  const auto ctx = RamificationContext::for_orders(9, 4, 3);
  const TorsionCycModule zero(ctx, 4);
  const TorsionCycModule a(ctx, 4, {{0, 1}}), b(ctx, 4, {{1, 1}});
  CHECK(additivity_check(zero, a));
  CHECK(additivity_check(a, b));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_module(rng, ctx, 4), y = random_module(rng, ctx, 4);
    CHECK(additivity_check(x, y));
    // Recompute the sum by hand from the concatenated factors.
    CycNumber manual(4);
    for (const auto *m : {&x, &y})
      for (const auto &f : m->factors)
        manual += q(f.multiplicity, ctx.v_p) * cyc::zeta_power(4, f.eigen_exponent);
    CHECK(p_brauer_character(direct_sum(x, y)) == manual);
  }
}

TEST_CASE("base change") {
  const auto ctx = RamificationContext::for_orders(8, 3, 2);
  const TorsionCycModule single(ctx, 3, {{1, 1}});
  const auto tripled = base_change(single, 3);
  CHECK(tripled.factors.front().multiplicity == 3);
  CHECK(tripled.v_p == 3 * single.v_p);
  CHECK(p_brauer_character(tripled) == p_brauer_character(single));
  CHECK(p_brauer_character(base_change(single, 1)) == p_brauer_character(single));
  CHECK_THROWS_AS(base_change(single, 0), DomainError);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_module(rng, ctx, 3);
    const auto twice = base_change(base_change(m, 2), 3);
    const auto once = base_change(m, 6);
    CHECK(twice.v_p == once.v_p);
    CHECK(p_brauer_character(twice) == p_brauer_character(once));
    CHECK(p_brauer_character(once) == p_brauer_character(m));
  }
}

TEST_CASE("super_brauer_rnm") {
  CHECK(super_brauer_rnm(8, 0, 0, 2) == CycNumber(1, 3));
  CHECK(super_brauer_rnm(8, 2, 0, 2) == CycNumber(1, q(-1, 2)));
  CHECK(super_brauer_rnm(15, 5, 0, 5).is_zero());
  CHECK_THROWS_AS(super_brauer_rnm(15, 1, 0, 2), NotAFactor);

  // With h: n_i * zeta^m and -zeta^m / phi(p^l).
  CHECK(super_brauer_rnm(4, 0, 1, 2, 3) == Rational(2) * cyc::zeta_power(3, 1));
  CHECK(super_brauer_rnm(4, 1, 2, 2, 3) == Rational(-1, 2) * cyc::zeta_power(3, 2));

  for (std::int64_t order : {4, 8, 12, 15, 21, 30})
    for (auto [p, e] : factorize(order))
      for (std::int64_t n = 0; n < order; ++n)
        CHECK(to_double(cyc::rational_part(super_brauer_rnm(order, n, 0, p))) ==
              doctest::Approx(bch_float(order, n, p)));
}

TEST_CASE("coefficient tables") {
  const auto t8 = coeff_closed_form(8, 2);
  for (std::int64_t k = 1; k < 8; ++k) {
    const Rational expected = k % 2 == 1 ? q(1, 2) : k % 4 == 2 ? q(3, 8) : q(1, 4);
    CHECK(t8.entries.at(k) == expected);
  }
  const auto t15 = coeff_closed_form(15, 3);
  const auto t15b = coeff_closed_form(15, 5);
  for (std::int64_t k = 1; k < 15; ++k) {
    CHECK(t15.entries.at(k) == (k % 3 == 0 ? q(0) : q(1, 10)));
    CHECK(t15b.entries.at(k) == (k % 5 == 0 ? q(0) : q(1, 12)));
  }
  const auto t4 = coeff_dft_oracle(4, 2);
  CHECK(t4.entries.at(1) == q(3, 4));
  CHECK(t4.entries.at(2) == q(1, 2));
  CHECK(t4.entries.at(3) == q(3, 4));
  CHECK(coeff_dft_oracle(8, 2) == t8);
  CHECK(coeff_dft_oracle(15, 3) == t15);

  CHECK_THROWS_AS(coeff_closed_form(15, 2), NotAFactor);
  CHECK_THROWS_AS(coeff_closed_form(15, 4), NotAFactor);
  CHECK_THROWS_AS(coeff_dft_oracle(9, 2), NotAFactor);
}

TEST_CASE("closed form matches the DFT oracle and a floating-point transform") {
  for (std::int64_t order = 2; order <= 40; ++order)
    for (auto [p, e] : factorize(order)) {
      const auto closed = coeff_closed_form(order, p);
      CHECK(closed == coeff_dft_oracle(order, p));
      for (std::int64_t k = 1; k < order; ++k)
        CHECK(to_double(closed.entries.at(k)) == doctest::Approx(dft_float(order, k, p)).epsilon(1e-9));
    }
}

TEST_CASE("table invariants") {
  for (std::int64_t order = 2; order <= 60; ++order)
    for (auto [p, e] : factorize(order)) {
      const auto t = coeff_closed_form(order, p);
      const auto pn = ipow(p, e);
      std::int64_t s = 0;
      for (auto d : divisors(order))
        if (d % p != 0) s += euler_phi(order / d);
      for (std::int64_t k = 1; k < order; ++k) {
        const Rational &a = t.entries.at(k);
        if (k % pn == 0) CHECK(a == 0);
        CHECK(a == t.entries.at(std::gcd(k, pn)));
        CHECK(a >= 0);
        CHECK((s * p) % a.get_den().get_si() == 0);
      }
    }
}

TEST_CASE("hauptmodul combinations") {
  using V = std::vector<CombinationTerm>;
  CHECK(hauptmodul_combination(15, 3) == V{{1, q(4, 5)}, {3, q(0)}, {5, q(1, 5)}});
  CHECK(hauptmodul_combination(15, 5) == V{{1, q(2, 3)}, {3, q(1, 3)}, {5, q(0)}});
  CHECK(hauptmodul_combination(21, 3) == V{{1, q(6, 7)}, {3, q(0)}, {7, q(1, 7)}});
  CHECK(hauptmodul_combination(21, 7) == V{{1, q(2, 3)}, {3, q(1, 3)}, {7, q(0)}});
  CHECK(hauptmodul_combination(8, 2) == V{{1, q(2)}, {2, q(3, 4)}, {4, q(1, 4)}});
  CHECK(hauptmodul_combination(15, 3)[1].is_zero());

  for (std::int64_t prime : {2, 3, 5, 7, 11, 13, 23})
    CHECK(hauptmodul_combination(prime, prime) == V{{1, q(1)}});

  for (std::int64_t order = 2; order <= 60; ++order)
    for (auto [p, e] : factorize(order))
      for (const auto &term : hauptmodul_combination(order, p)) CHECK(term.weight >= 0);
}
