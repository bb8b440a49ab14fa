#include "moulds/ncsf.hpp"

#include <algorithm>

#include "moulds/errors.hpp"

namespace moulds {

std::vector<Composition> compositions(int n) {
  if (n < 0) throw InvalidInputError("negative weight");
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  for (int first = 1; first <= n; ++first)
    for (const auto& rest : compositions(n - first)) {
      Composition c{first};
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    }
  return out;
}

Integer composition_product(const Composition& I) {
  Integer p(1);
  for (int part : I) p *= part;
  return p;
}

std::map<Composition, Rational> s_in_lambda(int n) {
  if (n < 1) throw InvalidInputError("degree must be positive");
  std::map<Composition, Rational> out;
  for (const auto& I : compositions(n)) {
    int sign = ((n - static_cast<int>(I.size())) % 2) ? -1 : 1;
    out[I] = Rational(sign);
  }
  return out;
}

std::map<Composition, Rational> s_in_psi(int n) {
  if (n < 1) throw InvalidInputError("degree must be positive");
  std::map<Composition, Rational> out;
  for (const auto& I : compositions(n)) {
    Integer denom(1);
    long run = 0;
    for (int part : I) {
      run += part;
      denom *= run;
    }
    out[I] = make_rational(Integer(1), denom);
  }
  return out;
}

std::map<Composition, Rational> psi_in_phi(int n) {
  if (n < 1) throw InvalidInputError("degree must be positive");
  std::map<Composition, Rational> out;
  for (const auto& K : compositions(n)) {
    int r = static_cast<int>(K.size());
    Integer alternating(0);
    for (int i = 1; i <= r; ++i) {
      Integer term = binomial(r - 1, i - 1) * K[static_cast<size_t>(i - 1)];
      alternating += (i % 2) ? term : -term;
    }
    Rational coeff = make_rational(alternating, factorial(r) * composition_product(K));
    if (coeff != 0) out[K] = coeff;
  }
  return out;
}

Rational simplex_integral(const std::vector<long>& exponents) {
  int r = static_cast<int>(exponents.size());
  Rational value(1);
  long suffix = 0;
  for (int m = 1; m <= r; ++m) {
    suffix += exponents[static_cast<size_t>(r - m)];
    value /= Rational(suffix + m);
  }
  return value;
}

std::map<Composition, Rational> phi_in_psi(int n) {
  if (n < 1) throw InvalidInputError("degree must be positive");
  std::map<Composition, Rational> out;
  for (const auto& I : compositions(n)) {
    int r = static_cast<int>(I.size());
    Rational acc(0);
    for (const auto& sigma : all_permutations(r)) {
      Permutation siginv = inverse_perm(sigma);
      std::vector<long> a(static_cast<size_t>(r));
      // the variable t_k carries the exponent attached to position r+1-inv(k)
      for (int k = 1; k <= r; ++k) {
        int j = r + 1 - siginv[static_cast<size_t>(k - 1)];
        a[static_cast<size_t>(k - 1)] = I[static_cast<size_t>(j - 1)] - 1;
      }
      int d = descent_number(sigma);
      Rational weight = Rational((d % 2) ? -1 : 1) /
                        Rational(Integer(r) * binomial(r - 1, d));
      acc += weight * simplex_integral(a);
    }
    Rational coeff = Rational(n) * acc;
    if (coeff != 0) out[I] = coeff;
  }
  return out;
}

std::map<Composition, Rational> expand_word(
    const std::function<std::map<Composition, Rational>(int)>& table,
    const Composition& K) {
  std::map<Composition, Rational> acc{{Composition{}, Rational(1)}};
  for (int part : K) {
    std::map<Composition, Rational> next;
    for (const auto& [prefix, c] : acc)
      for (const auto& [J, d] : table(part)) {
        Composition joined(prefix);
        joined.insert(joined.end(), J.begin(), J.end());
        next[joined] += c * d;
      }
    acc = std::move(next);
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = (it->second == 0) ? acc.erase(it) : std::next(it);
  return acc;
}

std::vector<FreeSeries> zassenhaus(int N) {
  if (N < 1) throw InvalidInputError("degree must be positive");
  FreeSeries remainder = FreeSeries::one(N);
  for (int n = 1; n <= N; ++n)
    for (const auto& [I, c] : s_in_psi(n)) remainder.add_term(I, c);
  std::vector<FreeSeries> out;
  for (int k = 1; k <= N; ++k) {
    FreeSeries zk = remainder.component(k).scaled(Rational(k));
    out.push_back(zk);
    remainder = zk.scaled(make_rational(-1, k)).exp() * remainder;
  }
  return out;
}

std::map<Permutation, QRatCoeff> phi_q(int n) {
  if (n < 1) throw InvalidInputError("degree must be positive");
  std::map<Permutation, QRatCoeff> out;
  for (const auto& sigma : all_permutations(n)) {
    int d = descent_number(sigma);
    int shift = d * (d + 1) / 2;
    ZPoly num = ZPoly::monomial(Integer((d % 2) ? -1 : 1),
                                major_index(sigma) - shift);
    ZPoly den = q_binomial(n - 1, d) * ZPoly(Integer(n));
    out.emplace(sigma, QRatCoeff(num, den));
  }
  return out;
}

FreeSeries perm_combination(const std::map<Permutation, Rational>& coeffs, int n) {
  int N = n * (n + 1) / 2;
  FreeSeries out(N);
  for (const auto& [sigma, c] : coeffs) {
    if (static_cast<int>(sigma.size()) != n || !is_permutation(sigma))
      throw InvalidInputError("coefficient keys must be permutations of 1..n");
    out.add_term(sigma, c);
  }
  return out;
}

}  // namespace moulds
