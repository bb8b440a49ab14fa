#include "moulds/linear_form.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "moulds/errors.hpp"

namespace moulds {

LinearForm::LinearForm(std::vector<std::pair<int, Integer>> entries) {
  std::map<int, Integer> acc;
  for (auto& [v, c] : entries) {
    if (v < 1) throw InvalidInputError("variable index must be >= 1");
    acc[v] += c;
  }
  for (auto& [v, c] : acc)
    if (c != 0) e_.emplace_back(v, c);
}

LinearForm LinearForm::var(int i) {
  return LinearForm({{i, Integer(1)}});
}

LinearForm LinearForm::sum_range(int lo, int hi) {
  std::vector<std::pair<int, Integer>> v;
  for (int i = lo; i <= hi; ++i) v.emplace_back(i, Integer(1));
  return LinearForm(std::move(v));
}

Integer LinearForm::coeff_of(int v) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), v,
                             [](const auto& p, int x) { return p.first < x; });
  if (it != e_.end() && it->first == v) return it->second;
  return Integer(0);
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  std::vector<std::pair<int, Integer>> v(e_);
  v.insert(v.end(), o.e_.begin(), o.e_.end());
  return LinearForm(std::move(v));
}

LinearForm LinearForm::operator-() const { return scaled(Integer(-1)); }

LinearForm LinearForm::scaled(const Integer& k) const {
  if (k == 0) return LinearForm();
  LinearForm r;
  r.e_.reserve(e_.size());
  for (const auto& [v, c] : e_) r.e_.emplace_back(v, c * k);
  return r;
}

LinearForm LinearForm::substitute(int v, const LinearForm& image) const {
  Integer c = coeff_of(v);
  if (c == 0) return *this;
  return drop_var(v) + image.scaled(c);
}

LinearForm LinearForm::drop_var(int v) const {
  LinearForm r;
  r.e_.reserve(e_.size());
  for (const auto& p : e_)
    if (p.first != v) r.e_.push_back(p);
  return r;
}

Rational LinearForm::eval(const std::vector<Rational>& point) const {
  Rational acc(0);
  for (const auto& [v, c] : e_) {
    if (v > static_cast<int>(point.size()))
      throw IndexError("evaluation point shorter than variable index");
    acc += Rational(c) * point[static_cast<size_t>(v - 1)];
  }
  return acc;
}

Rational LinearForm::normalize() {
  if (e_.empty()) return Rational(1);
  Integer g(0);
  for (const auto& [v, c] : e_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (e_.front().second < 0) g = -g;
  if (g == 1) return Rational(1);
  for (auto& [v, c] : e_) c /= g;
  return Rational(g);
}

bool LinearForm::operator<(const LinearForm& o) const {
  return e_ < o.e_;
}

std::string LinearForm::str() const {
  if (e_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : e_) {
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    Integer a = abs(c);
    if (a != 1) os << a.get_str();
    os << 'u' << v;
  }
  return os.str();
}

}  // namespace moulds
