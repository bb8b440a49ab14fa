#include "moulds/power_series.hpp"

#include <algorithm>

#include "moulds/errors.hpp"

namespace moulds {

PowerSeries::PowerSeries(int max_degree) {
  if (max_degree < 0) throw InvalidInputError("negative truncation degree");
  c_.assign(static_cast<size_t>(max_degree) + 1, Rational(0));
}

PowerSeries::PowerSeries(int max_degree, std::vector<Rational> coeffs)
    : PowerSeries(max_degree) {
  if (coeffs.size() > c_.size())
    throw InvalidInputError("coefficient list exceeds truncation degree");
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

PowerSeries PowerSeries::constant(int max_degree, const Rational& c) {
  PowerSeries s(max_degree);
  s.c_[0] = c;
  return s;
}

PowerSeries PowerSeries::t(int max_degree) {
  PowerSeries s(max_degree);
  if (max_degree < 1) throw InvalidInputError("degree too small for t");
  s.c_[1] = 1;
  return s;
}

const Rational& PowerSeries::coeff(int k) const {
  if (k < 0 || k > max_degree()) throw IndexError("series coefficient out of range");
  return c_[static_cast<size_t>(k)];
}

void PowerSeries::set_coeff(int k, const Rational& v) {
  if (k < 0 || k > max_degree()) throw IndexError("series coefficient out of range");
  c_[static_cast<size_t>(k)] = v;
}

bool PowerSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

void PowerSeries::require_same_degree(const PowerSeries& o) const {
  if (c_.size() != o.c_.size())
    throw InvalidInputError("truncation degree mismatch");
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  require_same_degree(o);
  PowerSeries r(*this);
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  require_same_degree(o);
  PowerSeries r(*this);
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] -= o.c_[k];
  return r;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  require_same_degree(o);
  PowerSeries r(max_degree());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; i + j < c_.size(); ++j)
      if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
  PowerSeries r(*this);
  for (auto& x : r.c_) x *= c;
  return r;
}

PowerSeries PowerSeries::inverse() const {
  if (c_[0] == 0) throw NonInvertibleError("series has zero constant term");
  PowerSeries r(max_degree());
  r.c_[0] = Rational(1) / c_[0];
  for (size_t k = 1; k < c_.size(); ++k) {
    Rational acc(0);
    for (size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc / c_[0];
  }
  return r;
}

// log f = integral of f'/f, valid for constant term 1
PowerSeries PowerSeries::log() const {
  if (c_[0] != 1) throw InvalidInputError("log needs constant term 1");
  PowerSeries inv = inverse();
  PowerSeries deriv(max_degree());
  for (size_t k = 1; k < c_.size(); ++k)
    deriv.c_[k - 1] = c_[k] * Rational(static_cast<long>(k));
  PowerSeries g = deriv * inv;
  PowerSeries r(max_degree());
  for (size_t k = 1; k < c_.size(); ++k)
    r.c_[k] = g.c_[k - 1] / Rational(static_cast<long>(k));
  return r;
}

// E' = f' E with E(0) = 1, valid for constant term 0
PowerSeries PowerSeries::exp() const {
  if (c_[0] != 0) throw InvalidInputError("exp needs constant term 0");
  PowerSeries r(max_degree());
  r.c_[0] = 1;
  for (size_t k = 1; k < c_.size(); ++k) {
    Rational acc(0);
    for (size_t j = 1; j <= k; ++j)
      acc += Rational(static_cast<long>(j)) * c_[j] * r.c_[k - j];
    r.c_[k] = acc / Rational(static_cast<long>(k));
  }
  return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& g) const {
  require_same_degree(g);
  if (g.c_[0] != 0) throw InvalidInputError("composition needs g(0) = 0");
  // Horner from the top coefficient down
  PowerSeries r = PowerSeries::constant(max_degree(), c_.back());
  for (int k = max_degree() - 1; k >= 0; --k)
    r = r * g + PowerSeries::constant(max_degree(), c_[static_cast<size_t>(k)]);
  return r;
}

PowerSeries series_compose_inverse(const PowerSeries& f, int N) {
  if (f.coeff(0) != 0) throw InvalidInputError("inversion needs f(0) = 0");
  if (f.coeff(1) == 0) throw NonInvertibleError("series has zero linear term");
  PowerSeries fN(N);
  for (int k = 0; k <= std::min(N, f.max_degree()); ++k) fN.set_coeff(k, f.coeff(k));
  PowerSeries g(N);
  g.set_coeff(1, Rational(1) / fN.coeff(1));
  for (int k = 2; k <= N; ++k) {
    Rational overshoot = fN.compose(g).coeff(k);
    g.set_coeff(k, -overshoot / fN.coeff(1));
  }
  return g;
}

}  // namespace moulds
