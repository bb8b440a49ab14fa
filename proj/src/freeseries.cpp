#include "moulds/freeseries.hpp"

#include <algorithm>

#include "moulds/errors.hpp"

namespace moulds {

int word_degree(const Word& w) {
  int d = 0;
  for (int x : w) d += x;
  return d;
}

FreeSeries::FreeSeries(int max_degree) : n_(max_degree) {
  if (max_degree < 0) throw InvalidInputError("negative truncation degree");
}

FreeSeries FreeSeries::one(int max_degree) {
  FreeSeries s(max_degree);
  s.c_[Word{}] = 1;
  return s;
}

FreeSeries FreeSeries::generator(int max_degree, int i) {
  if (i < 1) throw InvalidInputError("generator index must be positive");
  return word_elt(max_degree, Word{i});
}

FreeSeries FreeSeries::word_elt(int max_degree, const Word& w, const Rational& c) {
  FreeSeries s(max_degree);
  s.add_term(w, c);
  return s;
}

Rational FreeSeries::coeff(const Word& w) const {
  auto it = c_.find(w);
  return it == c_.end() ? Rational(0) : it->second;
}

void FreeSeries::add_term(const Word& w, const Rational& c) {
  for (int x : w)
    if (x < 1) throw InvalidInputError("generator index must be positive");
  if (word_degree(w) > n_ || c == 0) return;
  auto [it, inserted] = c_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

FreeSeries FreeSeries::operator+(const FreeSeries& o) const {
  if (n_ != o.n_) throw InvalidInputError("truncation degree mismatch");
  FreeSeries r(*this);
  for (const auto& [w, c] : o.c_) r.add_term(w, c);
  return r;
}

FreeSeries FreeSeries::operator-(const FreeSeries& o) const { return *this + (-o); }

FreeSeries FreeSeries::operator-() const {
  FreeSeries r(n_);
  for (const auto& [w, c] : c_) r.c_[w] = -c;
  return r;
}

FreeSeries FreeSeries::operator*(const FreeSeries& o) const {
  if (n_ != o.n_) throw InvalidInputError("truncation degree mismatch");
  FreeSeries r(n_);
  for (const auto& [v, cv] : c_) {
    int dv = word_degree(v);
    for (const auto& [w, cw] : o.c_) {
      if (dv + word_degree(w) > n_) continue;
      Word vw(v);
      vw.insert(vw.end(), w.begin(), w.end());
      r.add_term(vw, cv * cw);
    }
  }
  return r;
}

FreeSeries FreeSeries::scaled(const Rational& c) const {
  FreeSeries r(n_);
  if (c == 0) return r;
  for (const auto& [w, cw] : c_) r.c_[w] = cw * c;
  return r;
}

FreeSeries FreeSeries::component(int degree) const {
  FreeSeries r(n_);
  for (const auto& [w, c] : c_)
    if (word_degree(w) == degree) r.c_[w] = c;
  return r;
}

FreeSeries FreeSeries::length_component(int length) const {
  FreeSeries r(n_);
  for (const auto& [w, c] : c_)
    if (static_cast<int>(w.size()) == length) r.c_[w] = c;
  return r;
}

FreeSeries FreeSeries::exp() const {
  if (coeff(Word{}) != 0) throw InvalidInputError("exp needs zero constant term");
  FreeSeries sum = FreeSeries::one(n_);
  FreeSeries power = FreeSeries::one(n_);
  Rational fact(1);
  for (int k = 1; k <= n_; ++k) {
    power = power * (*this);
    if (power.is_zero()) break;
    fact *= k;
    sum = sum + power.scaled(Rational(1) / fact);
  }
  return sum;
}

FreeSeries FreeSeries::log() const {
  if (coeff(Word{}) != 1) throw InvalidInputError("log needs constant term 1");
  FreeSeries y = *this - FreeSeries::one(n_);
  FreeSeries sum(n_);
  FreeSeries power = FreeSeries::one(n_);
  for (int k = 1; k <= n_; ++k) {
    power = power * y;
    if (power.is_zero()) break;
    Rational c = Rational((k % 2) ? 1 : -1) / Rational(k);
    sum = sum + power.scaled(c);
  }
  return sum;
}

FreeSeries bracket(const FreeSeries& a, const FreeSeries& b) {
  return a * b - b * a;
}

FreeSeries dsw_project(const FreeSeries& x) {
  FreeSeries out(x.max_degree());
  for (const auto& [w, c] : x.coeffs()) {
    if (w.empty()) continue;  // projector kills constants
    FreeSeries nested = FreeSeries::generator(x.max_degree(), w[0]);
    for (size_t k = 1; k < w.size(); ++k)
      nested = bracket(nested, FreeSeries::generator(x.max_degree(), w[k]));
    out = out + nested.scaled(c / Rational(static_cast<long>(w.size())));
  }
  return out;
}

bool is_lie(const FreeSeries& x) {
  if (x.coeff(Word{}) != 0) return false;
  // a Lie element splits into Lie pieces per word length
  int max_len = 0;
  for (const auto& [w, c] : x.coeffs())
    max_len = std::max(max_len, static_cast<int>(w.size()));
  for (int l = 1; l <= max_len; ++l) {
    FreeSeries piece = x.length_component(l);
    if (dsw_project(piece) != piece) return false;
  }
  return true;
}

}  // namespace moulds
