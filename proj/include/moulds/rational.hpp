#ifndef MOULDS_RATIONAL_HPP
#define MOULDS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace moulds {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator), which is exactly the invariant the rest of the library
// assumes.
using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" or "p", optional sign. Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

// canonical "p/q", or "p" when the denominator is 1
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

// mpq_class(num, den) does not reduce; every fraction built from parts must
// go through here or GMP's arithmetic invariants break silently
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_pow(const Rational& base, long exp);
Integer binomial(long n, long k);
Integer factorial(long n);

// default seed for every randomized equality check; CLI --seed overrides
inline constexpr std::uint64_t kDefaultSeed = 20080514;

// uniform draw from {1, ..., 10^4}, used as an exact evaluation coordinate
Rational random_probe_value(std::mt19937_64& rng);

std::vector<Rational> random_probe_point(std::mt19937_64& rng, int arity);

}  // namespace moulds

#endif
