#include "moonshine/exactlinalg.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "moonshine/errors.hpp"

namespace moonshine::linalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer> &entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>> &rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::column(std::size_t j) const { return columns(j, 1); }

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix c(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) c(i, j) = (*this)(i, first + j);
  return c;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer &x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::hconcat(const IntMatrix &other) const {
  if (other.rows_ != rows_) throw DomainError("hconcat: row count mismatch");
  IntMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
  }
  return out;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix add: shape mismatch");
  IntMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

IntMatrix operator-(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sub: shape mismatch");
  IntMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix mul: shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer &aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntMatrix operator*(const Integer &s, const IntMatrix &a) {
  IntMatrix out = a;
  for (auto &x : out.data_) x *= s;
  return out;
}

bool operator==(const IntMatrix &a, const IntMatrix &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer &k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer &k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix power(const IntMatrix &a, std::uint64_t exponent) {
  if (a.rows() != a.cols()) throw DomainError("power of non-square matrix");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Integer determinant(const IntMatrix &a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix &a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition s{IntMatrix::identity(m), IntMatrix::identity(n), a};
  IntMatrix &D = s.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| of the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi == m || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == m) return s; // trailing block is zero

      D.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const Integer q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const Integer q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            D.add_row_multiple(t, i, 1);
            s.U.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Lattices

IntMatrix hermite_basis(const IntMatrix &generators) {
  IntMatrix h = generators;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t k = 0; // number of pivots found so far
  for (std::size_t i = 0; i < m && k < n; ++i) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = k; j < n; ++j)
        if (h(i, j) != 0 && (best == n || mpz_cmpabs(h(i, j).get_mpz_t(), h(i, best).get_mpz_t()) < 0)) best = j;
      if (best == n) break;
      h.swap_cols(k, best);
      bool done = true;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (h(i, j) == 0) continue;
        h.add_col_multiple(j, k, -Integer(h(i, j) / h(i, k)));
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (k == n || h(i, k) == 0) continue;
    if (h(i, k) < 0) h.negate_col(k);
    for (std::size_t j = 0; j < k; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, k).get_mpz_t());
      h.add_col_multiple(j, k, -q);
    }
    ++k;
  }
  return h.columns(0, k);
}

IntMatrix kernel_basis(const IntMatrix &a) {
  const SmithDecomposition s = smith_normal_form(a);
  const std::size_t r = s.rank();
  return s.V.columns(r, a.cols() - r);
}

std::optional<IntMatrix> solve_integral(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows() != b.rows()) throw DomainError("solve_integral: row count mismatch");
  const SmithDecomposition s = smith_normal_form(a);
  const std::size_t r = s.rank();
  const IntMatrix z = s.U * b;
  IntMatrix w(a.cols(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < r; ++i) {
      if (!mpz_divisible_p(z(i, c).get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(w(i, c).get_mpz_t(), z(i, c).get_mpz_t(), s.D(i, i).get_mpz_t());
    }
    for (std::size_t i = r; i < z.rows(); ++i)
      if (z(i, c) != 0) return std::nullopt;
  }
  return s.V * w;
}

// ---------------------------------------------------------------------------
// Finite abelian groups

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<Integer> &orders) {
  for (const auto &d : orders)
    if (d <= 0) throw DomainError("cyclic summand order must be positive");
  FiniteAbelianGroup g;
  if (orders.empty()) return g;
  const auto snf = smith_normal_form(IntMatrix::diagonal(orders));
  for (const auto &d : snf.invariant_factors())
    if (d != 1) g.divisors_.push_back(d);
  return g;
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto &d : divisors_) n *= d;
  return n;
}

bool FiniteAbelianGroup::annihilated_by(const Integer &n) const {
  return std::all_of(divisors_.begin(), divisors_.end(), [&](const Integer &d) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
  });
}

std::string FiniteAbelianGroup::to_string() const {
  if (divisors_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    out += (i ? " + Z/" : "Z/") + divisors_[i].get_str();
  return out;
}

FiniteAbelianGroup quotient_group(const IntMatrix &sub_gens, const IntMatrix &ambient_gens,
                                  std::optional<std::int64_t> localize_at) {
  const IntMatrix basis = hermite_basis(ambient_gens);
  const auto coords = solve_integral(basis, sub_gens);
  if (!coords) throw ContainmentError("sub lattice is not contained in the ambient lattice");
  const auto snf = smith_normal_form(*coords);
  if (snf.rank() != basis.cols())
    throw InfiniteQuotientError("sub lattice rank " + std::to_string(snf.rank()) +
                                " < ambient rank " + std::to_string(basis.cols()));
  auto group = FiniteAbelianGroup::from_cyclic_orders(snf.invariant_factors());
  return localize_at ? p_part(group, *localize_at) : group;
}

FiniteAbelianGroup p_part(const FiniteAbelianGroup &g, std::int64_t p) {
  std::vector<Integer> parts;
  for (Integer d : g.elementary_divisors()) {
    Integer pp = 1;
    while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
      d /= p;
      pp *= p;
    }
    parts.push_back(pp);
  }
  return FiniteAbelianGroup::from_cyclic_orders(parts);
}

// ---------------------------------------------------------------------------
// Text format

IntMatrix parse_matrix(std::istream &in) {
  std::string line;
  int lineno = 0;
  auto next_data_line = [&](std::string &out) {
    while (std::getline(in, out)) {
      ++lineno;
      const auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };
  auto read_integers = [&](const std::string &text) {
    std::istringstream ss(text);
    std::vector<Integer> values;
    std::string tok;
    while (ss >> tok) {
      Integer v;
      const bool sign = tok[0] == '-' || tok[0] == '+';
      if (tok.size() == (sign ? 1U : 0U) ||
          tok.find_first_not_of("0123456789", sign ? 1 : 0) != std::string::npos ||
          v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
        throw ParseError("not an integer: '" + tok + "'", lineno);
      values.push_back(v);
    }
    return values;
  };

  if (!next_data_line(line)) throw ParseError("missing 'rows cols' header", lineno + 1);
  const auto header = read_integers(line);
  if (header.size() != 2 || header[0] < 1 || header[1] < 1)
    throw ParseError("header must be two positive integers 'rows cols'", lineno);
  const std::size_t rows = header[0].get_ui();
  const std::size_t cols = header[1].get_ui();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!next_data_line(line)) throw ParseError("expected " + std::to_string(rows) + " rows", lineno + 1);
    const auto values = read_integers(line);
    if (values.size() != cols)
      throw ParseError("expected " + std::to_string(cols) + " entries, got " +
                           std::to_string(values.size()),
                       lineno);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = values[j];
  }
  if (next_data_line(line)) throw ParseError("trailing data after matrix", lineno);
  return m;
}

IntMatrix parse_matrix_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open matrix file '" + path + "'");
  return parse_matrix(in);
}

} // namespace moonshine::linalg
