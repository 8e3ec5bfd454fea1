#include <doctest.h>

#include <sstream>

#include "moonshine/errors.hpp"
#include "moonshine/exactlinalg.hpp"
#include "test_support.hpp"

using namespace moonshine;
using namespace moonshine::linalg;

namespace {

// Leibniz expansion; only used on tiny minors.
Integer leibniz_det(const std::vector<std::vector<Integer>> &m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t> &cur,
             std::vector<std::vector<std::size_t>> &out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, where
// D_k is the gcd of all k x k minors.
std::vector<Integer> determinantal_invariant_factors(const IntMatrix &a) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto &r : rs)
      for (const auto &c : cs) {
        std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = a(r[i], c[j]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), leibniz_det(minor).get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

void check_smith(const IntMatrix &a, const SmithDecomposition &s) {
  CHECK(s.U * a * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  const auto f = s.invariant_factors();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
}

} // namespace

TEST_CASE("smith normal form: worked examples") {
  const auto id = smith_normal_form(IntMatrix{{1, 0}, {0, 1}});
  CHECK(id.D == (IntMatrix{{1, 0}, {0, 1}}));

  const IntMatrix a{{2, 4}, {6, 8}};
  const auto s = smith_normal_form(a);
  check_smith(a, s);
  CHECK(s.D == (IntMatrix{{2, 0}, {0, 4}}));
  CHECK(determinantal_invariant_factors(a) == std::vector<Integer>{2, 4});

  const auto z = smith_normal_form(IntMatrix{{0, 0}, {0, 0}});
  CHECK(z.D == (IntMatrix{{0, 0}, {0, 0}}));
  CHECK(z.rank() == 0);
}

TEST_CASE("smith normal form: random matrices against determinantal divisors") {
  std::mt19937_64 rng(20241016);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rows = dim(rng), cols = dim(rng);
    const IntMatrix a = testsupport::random_matrix(rng, rows, cols, -9, 9);
    const auto s = smith_normal_form(a);
    check_smith(a, s);
    // Idempotent on its own output.
    CHECK(smith_normal_form(s.D).D == s.D);
    if (rows <= 4 && cols <= 4) CHECK(s.invariant_factors() == determinantal_invariant_factors(a));
  }
}

TEST_CASE("determinant matches Leibniz expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix a = testsupport::random_matrix(rng, 4, 4, -6, 6);
    std::vector<std::vector<Integer>> rows(4, std::vector<Integer>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rows[i][j] = a(i, j);
    CHECK(determinant(a) == leibniz_det(rows));
  }
}

TEST_CASE("kernel basis") {
  const auto k1 = kernel_basis(IntMatrix{{1, 1}});
  REQUIRE(k1.cols() == 1);
  CHECK(abs(k1(0, 0)) == 1);
  CHECK(k1(0, 0) == -k1(1, 0));

  CHECK(kernel_basis(IntMatrix::identity(2)).cols() == 0);

  // [[1,1],[1,1]]: exhaustive search over a box finds exactly the multiples of (1,-1).
  const IntMatrix a{{1, 1}, {1, 1}};
  const auto k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  int solutions = 0;
  for (long x = -5; x <= 5; ++x)
    for (long y = -5; y <= 5; ++y) {
      if (x + y != 0) continue;
      ++solutions;
      // every box solution is an integer multiple of the basis vector
      CHECK(Integer(x) % k(0, 0) == 0);
      CHECK(Integer(x) / k(0, 0) * k(1, 0) == y);
    }
  CHECK(solutions == 11);
}

TEST_CASE("kernel basis is saturated on random matrices") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix a = testsupport::random_matrix(rng, 2, 5, -4, 4);
    const auto k = kernel_basis(a);
    CHECK((a * k).is_zero());
    if (k.cols() == 0) continue;
    // Saturated: Z^n / kernel is torsion-free, i.e. invariant factors all 1.
    for (const auto &d : smith_normal_form(k).invariant_factors()) CHECK(d == 1);
  }
}

TEST_CASE("solve_integral") {
  const IntMatrix a{{2, 0}, {0, 3}};
  CHECK(*solve_integral(a, IntMatrix{{4}, {9}}) == (IntMatrix{{2}, {3}}));
  CHECK_FALSE(solve_integral(a, IntMatrix{{1}, {0}}).has_value());
  // Inconsistent (outside the column space).
  CHECK_FALSE(solve_integral(IntMatrix{{1}, {1}}, IntMatrix{{1}, {2}}).has_value());
}

TEST_CASE("hermite basis spans the same lattice") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix g = testsupport::random_matrix(rng, 3, 5, -6, 6);
    const IntMatrix h = hermite_basis(g);
    CHECK(solve_integral(h, g).has_value());
    CHECK(solve_integral(g, h).has_value());
    CHECK(h.cols() == smith_normal_form(g).rank());
  }
}

TEST_CASE("quotient_group") {
  CHECK(quotient_group(Integer(2) * IntMatrix::identity(2), IntMatrix::identity(2))
            .elementary_divisors() == std::vector<Integer>{2, 2});
  CHECK(quotient_group(IntMatrix{{1, 0}, {0, 6}}, IntMatrix::identity(2)).elementary_divisors() ==
        std::vector<Integer>{6});

  // diag(2,3): enumerate the box of coset representatives; 6 cosets, and
  // (1,1) has order 6, so the group is cyclic.
  const auto g = quotient_group(IntMatrix{{2, 0}, {0, 3}}, IntMatrix::identity(2));
  int cosets = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 3; ++y) ++cosets;
  int order_of_generator = 1;
  while (!(order_of_generator % 2 == 0 && order_of_generator % 3 == 0)) ++order_of_generator;
  CHECK(g.order() == cosets);
  CHECK(g.elementary_divisors() == std::vector<Integer>{Integer(order_of_generator)});

  CHECK_THROWS_AS(quotient_group(IntMatrix::identity(2), Integer(2) * IntMatrix::identity(2)),
                  ContainmentError);
  CHECK_THROWS_AS(quotient_group(IntMatrix{{1}, {0}}, IntMatrix::identity(2)), InfiniteQuotientError);
}

TEST_CASE("quotient_group(M*B, B) recovers the divisors of M") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> entry(1, 12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix b = testsupport::random_unimodular(rng, n);
    std::vector<Integer> diag;
    for (std::size_t i = 0; i < n; ++i) diag.emplace_back(entry(rng));
    const IntMatrix sub = b * IntMatrix::diagonal(diag);
    CHECK(quotient_group(sub, b) == FiniteAbelianGroup::from_cyclic_orders(diag));
  }
}

TEST_CASE("finite abelian groups and p-parts") {
  const auto g6 = FiniteAbelianGroup::from_cyclic_orders({6});
  CHECK(p_part(g6, 2).elementary_divisors() == std::vector<Integer>{2});
  CHECK(p_part(FiniteAbelianGroup::from_cyclic_orders({4, 12}), 3).elementary_divisors() ==
        std::vector<Integer>{3});
  CHECK(p_part(FiniteAbelianGroup::from_cyclic_orders({5}), 2).is_trivial());
  CHECK(FiniteAbelianGroup::from_cyclic_orders({2, 3}).elementary_divisors() ==
        std::vector<Integer>{6});
  CHECK(FiniteAbelianGroup::from_cyclic_orders({1, 1}).is_trivial());
  CHECK(FiniteAbelianGroup().order() == 1);
  CHECK(FiniteAbelianGroup::from_cyclic_orders({2, 4}).to_string() == "Z/2 + Z/4");

  // |G| is the product of its p-parts.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(1, 360);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Integer> orders{entry(rng), entry(rng), entry(rng)};
    const auto g = FiniteAbelianGroup::from_cyclic_orders(orders);
    Integer product = 1;
    for (auto [p, e] : factorize(g.order().get_si())) product *= p_part(g, p).order();
    CHECK(product == g.order());
  }
}

TEST_CASE("matrix text format") {
  std::istringstream ok("# swap\n2 2\n0 1\n\n1 0\n");
  CHECK(parse_matrix(ok) == (IntMatrix{{0, 1}, {1, 0}}));

  std::istringstream short_row("2 2\n1 0\n1\n");
  try {
    parse_matrix(short_row);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
  }
  std::istringstream junk("1 1\nx\n");
  CHECK_THROWS_AS(parse_matrix(junk), ParseError);
  std::istringstream trailing("1 1\n1\n2\n");
  CHECK_THROWS_AS(parse_matrix(trailing), ParseError);
}
