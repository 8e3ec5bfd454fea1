#pragma once

#include <cstdint>
#include <optional>

#include "moonshine/cyclotomic.hpp"
#include "moonshine/exactlinalg.hpp"

namespace moonshine::tate {

using linalg::FiniteAbelianGroup;
using linalg::IntMatrix;

/// The cyclic group Z/N acting on Z^r through an integral matrix g with
/// g^N = I (column-vector convention). The action need not be faithful:
/// the identity matrix with N = 2 is the trivial action of Z/2.
class CyclicAction {
public:
  /// Throws OrderError unless g^N = I.
  CyclicAction(IntMatrix g, std::int64_t order);

  /// Smallest d with g^d = I (a divisor of order()).
  std::int64_t exact_order() const;

  const IntMatrix &matrix() const noexcept { return g_; }
  std::int64_t order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return g_.rows(); }

  /// Nr = 1 + g + ... + g^(N-1).
  IntMatrix norm_map() const;

private:
  IntMatrix g_;
  std::int64_t order_;
};

/// Finite (or not) module Z^r / L, with L spanned by the columns of `relations`.
struct PresentedModule {
  std::size_t ambient_rank;
  IntMatrix relations;

  /// Z^r / modulus * Z^r.
  static PresentedModule reduction_mod(std::size_t rank, const Integer &modulus);
};

struct TateResult {
  FiniteAbelianGroup h0;
  FiniteAbelianGroup h1;

  friend bool operator==(const TateResult &, const TateResult &) = default;
};

/// H^0 = Ker(g-1)/Im(Nr) and H^1 = Ker(Nr)/Im(g-1) on the free module Z^r.
/// With localize_at = p only the p-primary parts are kept at every quotient.
TateResult tate_free(const CyclicAction &action, std::optional<std::int64_t> localize_at = std::nullopt);

/// Tate cohomology of <g> (order N) on a presented module. g must map the
/// relation lattice into itself (NotPreserved) and g^N must act trivially
/// on the quotient (OrderError).
TateResult tate_presented(const IntMatrix &g, const PresentedModule &module, std::int64_t order);

/// Lengths of H^0/H^1 of the rank-one module R_{n,m} on which g acts by
/// zeta_N^n and h by zeta_|h|^m. Lengths are measured in composition factors
/// R_p / (1 - zeta_{p^n_i}), so length(R_p / x R_p) = v(x).
struct RnmCohomology {
  std::int64_t h0_length = 0;
  std::int64_t h1_length = 0;
  std::int64_t eigen_exponent = 0; // m

  friend bool operator==(const RnmCohomology &, const RnmCohomology &) = default;
};

RnmCohomology rnm_cohomology(std::int64_t order, std::int64_t n, std::int64_t m,
                             const cyc::RamificationContext &ctx);

/// Reduces Z^r mod `modulus` and compares |H^0| with |H^1|.
bool herbrand_check(const CyclicAction &action, const Integer &modulus);

} // namespace moonshine::tate
