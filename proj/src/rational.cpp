#include "moulds/rational.hpp"

#include <cctype>

#include "moulds/errors.hpp"

namespace moulds {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  auto read_integer = [&](const char* what) {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0) throw ParseError(std::string("expected ") + what + " in rational literal '" + text + "'");
    return text.substr(start, i - start);
  };
  std::string num = read_integer("numerator");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_integer("denominator");
  }
  if (i != text.size()) throw ParseError("trailing characters in rational literal '" + text + "'");
  Integer n(num), d(den);
  if (sgn(d) == 0) throw ParseError("zero denominator in rational literal '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational rat_pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (is_zero(base)) throw NonInvertibleError("0 has no negative power");
    return 1 / rat_pow(base, -exp);
  }
  Rational acc(1), b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational random_probe_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(1, 10000);
  return Rational(dist(rng));
}

std::vector<Rational> random_probe_point(std::mt19937_64& rng, int arity) {
  std::vector<Rational> point;
  point.reserve(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) point.push_back(random_probe_value(rng));
  return point;
}

}  // namespace moulds
