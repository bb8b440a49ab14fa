#include "moulds/zoo.hpp"

#include "moulds/errors.hpp"
#include "moulds/ncsf.hpp"

namespace moulds {

RatMould uniform_mould(int n) {
  if (n < 1) throw ParamError("arity must be positive");
  FractionTerm<Rational> t;
  t.coeff = Rational(1);
  for (int v = 1; v <= n; ++v) t.denom.push_back(LinearForm::var(v));
  return RatMould(n, {std::move(t)});
}

RatMould timeordered_mould(int n) {
  if (n < 1) throw ParamError("arity must be positive");
  return identity_mould<Rational>(n);
}

RatMould ypq_mould(int p, int q) {
  if (p < 1 || q < 0) throw ParamError("need p >= 1 and q >= 0");
  int n = p + q;
  FractionTerm<Rational> t;
  t.coeff = Rational(1);
  t.numer[p] = 1;
  for (int v = 1; v <= n; ++v) t.denom.push_back(LinearForm::var(v));
  t.denom.push_back(LinearForm::sum_range(1, n));
  return RatMould(n, {std::move(t)});
}

QMould ty_mould(int n) {
  if (n < 1) throw ParamError("arity must be positive");
  QMould acc(n);
  for (int i = 1; i <= n; ++i)
    acc = acc + lift_to_q(ypq_mould(i, n - i)).scaled(QRatCoeff::q().pow(i - 1));
  return acc;
}

RatMould liny_mould(int n) {
  if (n < 1) throw ParamError("arity must be positive");
  RatMould acc(n);
  for (int i = 1; i <= n; ++i)
    acc = acc + ypq_mould(i, n - i).scaled(Rational(i));
  return acc;
}

QMould qliny_mould(int n) {
  if (n < 1) throw ParamError("arity must be positive");
  QMould acc(n);
  for (int i = 1; i <= n; ++i)
    acc = acc + lift_to_q(ypq_mould(i, n - i)).scaled(QRatCoeff(q_integer(i)));
  return acc;
}

RatMould cm_mould(int n) {
  if (n < 1) throw ParamError("arity must be positive");
  RatMould acc(n);
  for (int k = 1; k <= n; ++k) {
    Rational c = make_rational(binomial(n, k) * k, factorial(n));
    if ((n - k) % 2) c = -c;
    acc = acc + ypq_mould(k, n - k).scaled(c);
  }
  return acc;
}

FQSymElt<Rational> solomon_fsym(int n) {
  if (n < 1) throw ParamError("arity must be positive");
  FQSymElt<Rational> out(n);
  for (const auto& tau : all_permutations(n)) {
    int d = descent_number(inverse_perm(tau));
    Rational c = make_rational(Integer((d % 2) ? -1 : 1),
                               Integer(n) * binomial(n - 1, d));
    out.accumulate(tau, c);
  }
  return out;
}

FQSymElt<QRatCoeff> qsolomon_fsym(int n) {
  if (n < 1) throw ParamError("arity must be positive");
  FQSymElt<QRatCoeff> out(n);
  for (const auto& [sigma, c] : phi_q(n)) out.accumulate(inverse_perm(sigma), c);
  return out;
}

// iterated-bracket expansion: the valley words (decreasing prefix, then 1,
// then the ascending complement) carry sign (-1)^{prefix length}
FQSymElt<Rational> dynkin_fsym(int n) {
  if (n < 1) throw ParamError("arity must be positive");
  FQSymElt<Rational> out(n);
  for (const auto& w : valley_permutations(n)) {
    size_t pos = 0;
    while (w[pos] != 1) ++pos;
    Rational sign((pos % 2) ? -1 : 1);
    out.accumulate(inverse_perm(w), sign);
  }
  return out;
}

QMould po_mould(int n) {
  if (n < 1) throw ParamError("arity must be positive");
  FractionTerm<QRatCoeff> seed;
  seed.coeff = QRatCoeff(1);
  seed.denom.push_back(LinearForm::var(1));
  QMould m(n, {std::move(seed)});
  for (int i = 2; i <= n; ++i) {
    FractionTerm<QRatCoeff> step;
    step.coeff = QRatCoeff(1);
    step.denom.push_back(LinearForm::var(i));
    step.denom.push_back(LinearForm::sum_range(1, i));
    QMould base = m.multiply(QMould(n, {std::move(step)}));
    // numerator factor u_1+...+u_{i-1} + q u_i, split on the q term
    m = base.multiply_by_form(LinearForm::sum_range(1, i - 1)) +
        base.multiply_by_form(LinearForm::var(i)).scaled(QRatCoeff::q());
  }
  return m;
}

std::vector<Rational> scalar_apply(const MouldFamily& family,
                                   const std::vector<Rational>& a, int N) {
  if (N < 1) throw InvalidInputError("need N >= 1");
  if (static_cast<int>(a.size()) < N)
    throw InvalidInputError("need coefficients a_1..a_N");
  std::vector<Rational> c(static_cast<size_t>(N), Rational(0));
  std::vector<RatMould> cache;
  auto member = [&](int n) -> const RatMould& {
    while (static_cast<int>(cache.size()) < n)
      cache.push_back(family(static_cast<int>(cache.size()) + 1));
    return cache[static_cast<size_t>(n - 1)];
  };
  for (int k = 1; k <= N; ++k) {
    for (const auto& tuple : compositions(k)) {
      Rational prod(1);
      for (int i : tuple) prod *= a[static_cast<size_t>(i - 1)];
      if (prod == 0) continue;  // skip before touching the mould
      std::vector<Rational> point;
      point.reserve(tuple.size());
      for (int i : tuple) point.emplace_back(i);
      c[static_cast<size_t>(k - 1)] +=
          member(static_cast<int>(tuple.size())).eval(point) * prod;
    }
  }
  return c;
}

FreeSeries nc_apply(const MouldFamily& family, int N, bool with_unit) {
  if (N < 1) throw InvalidInputError("need N >= 1");
  FreeSeries out(N);
  if (with_unit) out = FreeSeries::one(N);
  std::vector<RatMould> cache;
  auto member = [&](int n) -> const RatMould& {
    while (static_cast<int>(cache.size()) < n)
      cache.push_back(family(static_cast<int>(cache.size()) + 1));
    return cache[static_cast<size_t>(n - 1)];
  };
  for (int k = 1; k <= N; ++k)
    for (const auto& tuple : compositions(k)) {
      std::vector<Rational> point;
      point.reserve(tuple.size());
      for (int i : tuple) point.emplace_back(i);
      Rational value = member(static_cast<int>(tuple.size())).eval(point);
      out.add_term(tuple, value);
    }
  return out;
}

}  // namespace moulds
