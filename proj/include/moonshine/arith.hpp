#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace moonshine {

using Integer = mpz_class;
using Rational = mpq_class;

// Small-integer number theory shared by the cyclotomic, brauer and leech code.
// Orders and moduli in this project stay far below 2^31, so plain int64 is
// used for them; anything that can grow (matrix entries, coefficients) is GMP.

bool is_prime(std::int64_t n);

// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Positive divisors in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

// Largest e with p^e | n (n != 0).
int multiplicity(std::int64_t n, std::int64_t p);

std::int64_t ipow(std::int64_t base, int exp);

// Non-negative residue of a mod m (m > 0).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

// Exact text form: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

// Parses "a" or "a/b" (optional sign); throws std::invalid_argument.
Rational parse_rational(const std::string &text);

} // namespace moonshine
