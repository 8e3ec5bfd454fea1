#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "moonshine/exactlinalg.hpp"
#include "moonshine/tate.hpp"

namespace moonshine::leech {

using linalg::IntMatrix;

/// Binary words of length 24: bit i is coordinate i. Coordinates 0..22 are
/// Z/23 and coordinate 23 is the point at infinity.
using Word = std::uint32_t;

struct GolayCode {
  std::vector<Word> generator; // 12 rows
  std::vector<Word> codewords; // all 4096, sorted

  bool contains(Word w) const;
  std::map<int, int> weight_distribution() const;
  IntMatrix generator_matrix() const; // 12 x 24, entries 0/1
};

/// Code spanned by the 12 rows; ConstructionError unless it has 4096 words
/// with weight distribution {0:1, 8:759, 12:2576, 16:759, 24:1}.
GolayCode build_golay(const std::vector<Word> &generator);

/// Quadratic non-residues mod 23 with a parity bit at infinity, and their
/// first twelve cyclic shifts.
GolayCode build_golay();

/// Leech lattice in coordinates scaled by sqrt 8: basis vectors are the rows
/// of B and Gram = B B^T / 8.
struct LeechBasis {
  IntMatrix B;
  IntMatrix gram;
};

/// Checks integrality, evenness, det(Gram) = 1 and the bounded no-root
/// window (coefficients in -2..2 on at most 3 basis vectors); AxiomError
/// names the first axiom that fails.
LeechBasis leech_from_rows(const IntMatrix &B);

/// Lower-triangular basis: 8 e_0; 2c for an echelon basis of the codewords
/// missing infinity; 4 e_0 + 4 e_q on the remaining coordinates; and
/// (-3, 1, ..., 1).
LeechBasis build_leech(const GolayCode &code);

class PermAutomorphism {
public:
  PermAutomorphism(); // identity
  /// images[i] = where point i goes; DomainError unless a permutation of 0..23.
  explicit PermAutomorphism(const std::array<int, 24> &images);

  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::array<int, 24> &images() const noexcept { return images_; }
  Word apply(Word w) const;

  std::int64_t order() const; // lcm of the cycle lengths
  bool preserves(const GolayCode &code) const;

  /// (a * b)(i) = a(b(i)).
  friend PermAutomorphism operator*(const PermAutomorphism &a, const PermAutomorphism &b);
  PermAutomorphism pow(std::int64_t e) const;

  friend bool operator==(const PermAutomorphism &, const PermAutomorphism &) = default;

private:
  std::array<int, 24> images_;
};

struct NamedPerm {
  std::string name;
  PermAutomorphism perm;
};

/// Lines "PERM <name> <24 images>", '#' comments. ParseError with line number.
std::vector<NamedPerm> parse_m24_generators(std::istream &in);
std::vector<NamedPerm> load_m24_generators(const std::string &path);

/// Seeded search for an element of exact order `target` among random words in
/// the generators (each of which must preserve the code, else
/// NotAnAutomorphism). NotFound once the search budget runs out.
PermAutomorphism m24_element_of_order(const GolayCode &code, const std::vector<NamedPerm> &generators,
                                      std::int64_t target, std::uint64_t seed);

/// Matrix P of the permutation in the lattice basis (column convention:
/// column i holds the coordinates of perm(b_i)), wrapped as a cyclic action
/// of the permutation's order. NotAnAutomorphism if P is not integral, does
/// not preserve the Gram matrix, or has the wrong order.
tate::CyclicAction action_on_leech(const PermAutomorphism &perm, const LeechBasis &basis);

/// tate_free of the lattice action.
tate::TateResult h1_lattice_check(const PermAutomorphism &perm, const LeechBasis &basis);

} // namespace moonshine::leech
