#include "moonshine/leech.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "moonshine/errors.hpp"

namespace moonshine::leech {

namespace {

constexpr int kPoints = 24;
constexpr Word kAll = (Word(1) << kPoints) - 1;

} // namespace

bool GolayCode::contains(Word w) const { return std::binary_search(codewords.begin(), codewords.end(), w); }

std::map<int, int> GolayCode::weight_distribution() const {
  std::map<int, int> out;
  for (Word w : codewords) ++out[std::popcount(w)];
  return out;
}

IntMatrix GolayCode::generator_matrix() const {
  IntMatrix g(generator.size(), kPoints);
  for (std::size_t r = 0; r < generator.size(); ++r)
    for (int c = 0; c < kPoints; ++c) g(r, static_cast<std::size_t>(c)) = (generator[r] >> c) & 1U;
  return g;
}

GolayCode build_golay(const std::vector<Word> &generator) {
  GolayCode code{generator, {}};
  if (generator.size() != 12) throw ConstructionError("Golay generator needs 12 rows");
  code.codewords.reserve(4096);
  for (std::uint32_t mask = 0; mask < 4096; ++mask) {
    Word w = 0;
    for (int r = 0; r < 12; ++r)
      if (mask >> r & 1U) w ^= generator[static_cast<std::size_t>(r)];
    code.codewords.push_back(w & kAll);
  }
  std::sort(code.codewords.begin(), code.codewords.end());
  if (std::adjacent_find(code.codewords.begin(), code.codewords.end()) != code.codewords.end())
    throw ConstructionError("Golay generator rows are linearly dependent");
  const std::map<int, int> expected{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  if (code.weight_distribution() != expected) throw ConstructionError("weight distribution is not that of the Golay code");
  return code;
}

GolayCode build_golay() {
  Word base = Word(1) << 23;
  for (int x = 1; x < 23; ++x) {
    bool residue = false;
    for (int y = 1; y < 23; ++y)
      if (y * y % 23 == x) residue = true;
    if (!residue) base |= Word(1) << x;
  }
  std::vector<Word> rows;
  for (int s = 0; s < 12; ++s) {
    Word w = Word(1) << 23;
    for (int x = 0; x < 23; ++x)
      if (base >> x & 1U) w |= Word(1) << ((x + s) % 23);
    rows.push_back(w);
  }
  return build_golay(rows);
}

LeechBasis leech_from_rows(const IntMatrix &B) {
  if (B.rows() != kPoints || B.cols() != kPoints) throw AxiomError("rank: basis must be 24 x 24");
  const IntMatrix scaled = B * B.transpose();
  IntMatrix gram(kPoints, kPoints);
  for (std::size_t i = 0; i < kPoints; ++i)
    for (std::size_t j = 0; j < kPoints; ++j) {
      if (scaled(i, j) % 8 != 0) throw AxiomError("integral: <b_i, b_j> is not an integer");
      gram(i, j) = scaled(i, j) / 8;
    }
  for (std::size_t i = 0; i < kPoints; ++i)
    if (gram(i, i) % 2 != 0) throw AxiomError("even: <b_i, b_i> is odd");
  if (determinant(gram) != 1) throw AxiomError("unimodular: det(Gram) is not 1");

  // No roots on the window of coefficient vectors in -2..2 with support <= 3.
  std::vector<long> g(kPoints * kPoints);
  for (std::size_t i = 0; i < kPoints; ++i)
    for (std::size_t j = 0; j < kPoints; ++j) g[i * kPoints + j] = gram(i, j).get_si();
  auto G = [&](int i, int j) { return g[static_cast<std::size_t>(i * kPoints + j)]; };
  const int coeffs[] = {-2, -1, 1, 2};
  for (int i = 0; i < kPoints; ++i)
    for (int a : coeffs) {
      if (a * a * G(i, i) == 2) throw AxiomError("no roots: norm-2 vector found");
      for (int j = i + 1; j < kPoints; ++j)
        for (int b : coeffs) {
          const long two = a * a * G(i, i) + b * b * G(j, j) + 2 * a * b * G(i, j);
          if (two == 2) throw AxiomError("no roots: norm-2 vector found");
          for (int k = j + 1; k < kPoints; ++k)
            for (int c : coeffs) {
              const long n = two + c * c * G(k, k) + 2 * a * c * G(i, k) + 2 * b * c * G(j, k);
              if (n == 2) throw AxiomError("no roots: norm-2 vector found");
            }
        }
    }
  return {B, gram};
}

LeechBasis build_leech(const GolayCode &code) {
  // Echelon basis of the codewords avoiding infinity, keyed by highest bit.
  std::map<int, Word> pivots;
  for (Word w : code.codewords) {
    if (w >> 23 & 1U) continue;
    while (w != 0) {
      const int top = std::bit_width(w) - 1;
      const auto it = pivots.find(top);
      if (it == pivots.end()) {
        pivots.emplace(top, w);
        break;
      }
      w ^= it->second;
    }
  }
  if (pivots.size() != 11) throw ConstructionError("shortened code does not have dimension 11");

  IntMatrix B(kPoints, kPoints);
  B(0, 0) = 8;
  for (int q = 1; q < 23; ++q) {
    const auto row = static_cast<std::size_t>(q);
    if (const auto it = pivots.find(q); it != pivots.end()) {
      for (int c = 0; c < kPoints; ++c)
        if (it->second >> c & 1U) B(row, static_cast<std::size_t>(c)) = 2;
    } else {
      B(row, 0) = 4;
      B(row, row) = 4;
    }
  }
  B(23, 0) = -3;
  for (std::size_t c = 1; c < kPoints; ++c) B(23, c) = 1;
  return leech_from_rows(B);
}

PermAutomorphism::PermAutomorphism() { std::iota(images_.begin(), images_.end(), 0); }

PermAutomorphism::PermAutomorphism(const std::array<int, 24> &images) : images_(images) {
  std::array<bool, 24> seen{};
  for (int x : images_) {
    if (x < 0 || x >= kPoints || seen[static_cast<std::size_t>(x)])
      throw DomainError("not a permutation of 0..23");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Word PermAutomorphism::apply(Word w) const {
  Word out = 0;
  for (int i = 0; i < kPoints; ++i)
    if (w >> i & 1U) out |= Word(1) << images_[static_cast<std::size_t>(i)];
  return out;
}

std::int64_t PermAutomorphism::order() const {
  std::int64_t o = 1;
  std::array<bool, 24> seen{};
  for (int i = 0; i < kPoints; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::int64_t len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

bool PermAutomorphism::preserves(const GolayCode &code) const {
  return std::all_of(code.codewords.begin(), code.codewords.end(),
                     [&](Word w) { return code.contains(apply(w)); });
}

PermAutomorphism operator*(const PermAutomorphism &a, const PermAutomorphism &b) {
  std::array<int, 24> out{};
  for (int i = 0; i < kPoints; ++i) out[static_cast<std::size_t>(i)] = a(b(i));
  return PermAutomorphism(out);
}

PermAutomorphism PermAutomorphism::pow(std::int64_t e) const {
  const std::int64_t o = order();
  e = mod_floor(e, o);
  PermAutomorphism result, base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return result;
}

std::vector<NamedPerm> parse_m24_generators(std::istream &in) {
  std::vector<NamedPerm> out;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ss(text);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] != "PERM") throw ParseError("unknown record '" + tok[0] + "'", line);
    if (tok.size() != 26) throw ParseError("PERM needs a name and 24 images", line);
    std::array<int, 24> images{};
    for (std::size_t i = 0; i < 24; ++i) {
      const std::string &s = tok[i + 2];
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 2)
        throw ParseError("bad image '" + s + "'", line);
      images[i] = std::stoi(s);
    }
    try {
      out.push_back({tok[1], PermAutomorphism(images)});
    } catch (const DomainError &e) {
      throw ParseError(e.what(), line);
    }
  }
  if (out.empty()) throw DataError("no PERM records");
  return out;
}

std::vector<NamedPerm> load_m24_generators(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open generator file '" + path + "'");
  return parse_m24_generators(in);
}

PermAutomorphism m24_element_of_order(const GolayCode &code, const std::vector<NamedPerm> &generators,
                                      std::int64_t target, std::uint64_t seed) {
  if (target < 1) throw DomainError("element order must be positive");
  for (const auto &g : generators)
    if (!g.perm.preserves(code)) throw NotAnAutomorphism("generator " + g.name + " does not preserve the code");
  if (target == 1) return {};
  if (generators.empty()) throw NotFound("no generators");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
  std::uniform_int_distribution<int> length(8, 48);
  PermAutomorphism x;
  for (int attempt = 0; attempt < 20000; ++attempt) {
    const int len = length(rng);
    for (int i = 0; i < len; ++i) x = x * generators[pick(rng)].perm;
    const std::int64_t o = x.order();
    if (o % target != 0) continue;
    const PermAutomorphism y = x.pow(o / target);
    if (y.order() == target && y.preserves(code)) return y;
  }
  throw NotFound("no element of order " + std::to_string(target) + " found");
}

tate::CyclicAction action_on_leech(const PermAutomorphism &perm, const LeechBasis &basis) {
  const IntMatrix bt = basis.B.transpose();
  // Rows of Pi B^T are permuted: (Pi x)_{perm(j)} = x_j.
  IntMatrix moved(kPoints, kPoints);
  for (std::size_t j = 0; j < kPoints; ++j)
    for (std::size_t c = 0; c < kPoints; ++c) moved(static_cast<std::size_t>(perm(static_cast<int>(j))), c) = bt(j, c);
  const auto p = linalg::solve_integral(bt, moved);
  if (!p) throw NotAnAutomorphism("permutation does not map the lattice to itself");
  if (p->transpose() * basis.gram * *p != basis.gram) throw NotAnAutomorphism("matrix does not preserve the Gram form");
  const std::int64_t order = perm.order();
  tate::CyclicAction action(*p, order);
  if (action.exact_order() != order) throw NotAnAutomorphism("lattice action has the wrong order");
  return action;
}

tate::TateResult h1_lattice_check(const PermAutomorphism &perm, const LeechBasis &basis) {
  return tate::tate_free(action_on_leech(perm, basis));
}

} // namespace moonshine::leech
