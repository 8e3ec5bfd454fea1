#include "moonshine/tate.hpp"

#include <numeric>

#include "moonshine/errors.hpp"

namespace moonshine::tate {

using linalg::kernel_basis;
using linalg::quotient_group;
using linalg::solve_integral;

CyclicAction::CyclicAction(IntMatrix g, std::int64_t order) : g_(std::move(g)), order_(order) {
  if (g_.rows() != g_.cols() || g_.empty()) throw OrderError("action matrix must be square and nonempty");
  if (order < 1) throw OrderError("order must be positive");
  if (!linalg::power(g_, static_cast<std::uint64_t>(order)).is_identity())
    throw OrderError("g^" + std::to_string(order) + " is not the identity");
}

std::int64_t CyclicAction::exact_order() const {
  std::int64_t n = order_;
  for (auto [q, e] : factorize(order_))
    while (n % q == 0 && linalg::power(g_, static_cast<std::uint64_t>(n / q)).is_identity()) n /= q;
  return n;
}

IntMatrix CyclicAction::norm_map() const {
  IntMatrix sum(g_.rows(), g_.cols());
  IntMatrix p = IntMatrix::identity(g_.rows());
  for (std::int64_t i = 0; i < order_; ++i) {
    sum = sum + p;
    p = p * g_;
  }
  return sum;
}

PresentedModule PresentedModule::reduction_mod(std::size_t rank, const Integer &modulus) {
  return {rank, modulus * IntMatrix::identity(rank)};
}

TateResult tate_free(const CyclicAction &action, std::optional<std::int64_t> localize_at) {
  const IntMatrix g_minus_1 = action.matrix() - IntMatrix::identity(action.rank());
  const IntMatrix nr = action.norm_map();
  // Saturated kernels; Im(Nr) sits inside Ker(g-1) and Im(g-1) inside Ker(Nr)
  // because (g-1) Nr = Nr (g-1) = g^N - 1 = 0.
  return {quotient_group(nr, kernel_basis(g_minus_1), localize_at),
          quotient_group(g_minus_1, kernel_basis(nr), localize_at)};
}

namespace {

// Generators of {x in Z^r : f x in L}, L spanned by the columns of rel.
IntMatrix preimage_lattice(const IntMatrix &f, const IntMatrix &rel) {
  const IntMatrix stacked = f.hconcat(Integer(-1) * rel);
  const IntMatrix k = kernel_basis(stacked);
  IntMatrix top(f.cols(), k.cols());
  for (std::size_t i = 0; i < f.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) top(i, j) = k(i, j);
  return top;
}

} // namespace

TateResult tate_presented(const IntMatrix &g, const PresentedModule &module, std::int64_t order) {
  const IntMatrix &rel = module.relations;
  const std::size_t r = module.ambient_rank;
  if (g.rows() != r || g.cols() != r || rel.rows() != r)
    throw DomainError("action and presentation have inconsistent ranks");
  if (order < 1) throw OrderError("order must be positive");
  if (!solve_integral(rel, g * rel)) throw NotPreserved("g does not preserve the relation lattice");
  const IntMatrix id = IntMatrix::identity(r);
  if (!solve_integral(rel, linalg::power(g, static_cast<std::uint64_t>(order)) - id))
    throw OrderError("g^" + std::to_string(order) + " is not the identity on the module");

  const IntMatrix g_minus_1 = g - id;
  IntMatrix nr(r, r);
  IntMatrix p = id;
  for (std::int64_t i = 0; i < order; ++i) {
    nr = nr + p;
    p = p * g;
  }
  return {quotient_group(nr.hconcat(rel), preimage_lattice(g_minus_1, rel)),
          quotient_group(g_minus_1.hconcat(rel), preimage_lattice(nr, rel))};
}

RnmCohomology rnm_cohomology(std::int64_t order, std::int64_t n, std::int64_t m,
                             const cyc::RamificationContext &ctx) {
  if (order < 1 || ctx.big_modulus % order != 0 || multiplicity(order, ctx.p) != ctx.n_i)
    throw DomainError("context does not describe a prime factor of N = " + std::to_string(order));
  const std::int64_t h_order = ctx.big_modulus / order;
  RnmCohomology out;
  out.eigen_exponent = mod_floor(m, h_order);
  const std::int64_t residue = mod_floor(n, order);
  if (residue == 0) {
    // R_p / N R_p, and the prime-to-p part of N is a unit.
    out.h0_length = ctx.n_i * ctx.v_p;
    return out;
  }
  const std::int64_t t = order / std::gcd(residue, order); // order of zeta_N^n
  const auto v = cyc::one_minus_zeta_valuation(t, ctx);
  if (v.infinite || v.value.get_den() != 1) throw DomainError("non-integral length");
  out.h1_length = v.value.get_num().get_si();
  return out;
}

bool herbrand_check(const CyclicAction &action, const Integer &modulus) {
  const auto result = tate_presented(action.matrix(), PresentedModule::reduction_mod(action.rank(), modulus),
                                     action.order());
  return result.h0.order() == result.h1.order();
}

} // namespace moonshine::tate
