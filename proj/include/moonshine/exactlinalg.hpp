#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "moonshine/arith.hpp"

namespace moonshine::linalg {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer> &entries);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>> &rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix transpose() const;
  IntMatrix column(std::size_t j) const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  bool is_zero() const;
  bool is_identity() const;

  // Column-wise concatenation [*this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix &other) const;

  friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
  friend IntMatrix operator-(const IntMatrix &a, const IntMatrix &b);
  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  friend IntMatrix operator*(const Integer &s, const IntMatrix &a);
  friend bool operator==(const IntMatrix &a, const IntMatrix &b);

  // Row/column operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &k); // row_dst += k*row_src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &k); // col_dst += k*col_src
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix power(const IntMatrix &a, std::uint64_t exponent);

// Exact determinant (fraction-free Bareiss elimination); a must be square.
Integer determinant(const IntMatrix &a);

std::ostream &operator<<(std::ostream &os, const IntMatrix &m);

/// U * A * V = D with U, V unimodular and D in Smith form.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;

  std::size_t rank() const;
  // d_1, ..., d_rank (all positive, each dividing the next).
  std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix &a);

/// Column-style Hermite normal form: returns a basis (as columns, lower
/// echelon, positive pivots, reduced off-pivot entries) of the column lattice.
IntMatrix hermite_basis(const IntMatrix &generators);

/// Saturated basis (columns) of {x in Z^n : A x = 0}.
IntMatrix kernel_basis(const IntMatrix &a);

/// Integral X with A X = B, if one exists.
std::optional<IntMatrix> solve_integral(const IntMatrix &a, const IntMatrix &b);

/// Finite abelian group in invariant-factor form Z/d1 + ... + Z/dk,
/// 2 <= d1 | d2 | ... | dk.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;

  // Accepts any list of positive orders of cyclic summands and
  // canonicalises it (so {2, 3} becomes {6}; units are dropped).
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<Integer> &orders);

  const std::vector<Integer> &elementary_divisors() const noexcept { return divisors_; }
  Integer order() const;
  bool is_trivial() const noexcept { return divisors_.empty(); }
  // True iff n kills every element.
  bool annihilated_by(const Integer &n) const;
  std::string to_string() const; // "0" or "Z/2 + Z/4"

  friend bool operator==(const FiniteAbelianGroup &, const FiniteAbelianGroup &) = default;

private:
  std::vector<Integer> divisors_;
};

/// (ambient lattice) / (sub lattice), both given by generating columns.
/// With localize_at set, every prime-to-p elementary divisor is discarded.
FiniteAbelianGroup quotient_group(const IntMatrix &sub_gens, const IntMatrix &ambient_gens,
                                  std::optional<std::int64_t> localize_at = std::nullopt);

FiniteAbelianGroup p_part(const FiniteAbelianGroup &g, std::int64_t p);

/// Matrix text format: "rows cols", then one line of integers per row;
/// lines starting with '#' are comments. Throws ParseError.
IntMatrix parse_matrix(std::istream &in);
IntMatrix parse_matrix_file(const std::string &path);

} // namespace moonshine::linalg
