#ifndef MOULDS_MOULD_HPP
#define MOULDS_MOULD_HPP

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "moulds/errors.hpp"
#include "moulds/linear_form.hpp"
#include "moulds/qpoly.hpp"
#include "moulds/rational.hpp"

namespace moulds {

using Monomial = std::map<int, int>;  // variable index -> exponent >= 1

// coeff * (product of numerator variables) / (product of linear forms)
template <class K>
struct FractionTerm {
  K coeff{};
  Monomial numer;
  std::vector<LinearForm> denom;
};

// A rational mould component of fixed arity: a sum of fraction terms in
// canonical form (normalized forms, single-variable forms cancelled against
// the numerator, terms sorted and merged, zero terms dropped). Canonical form
// makes structural equality meaningful for products of linear forms, since
// those factor uniquely; genuinely different presentations of the same
// function still need equal().
template <class K>
class Mould {
 public:
  Mould() = default;
  explicit Mould(int arity) : arity_(arity) { check_arity(); }
  Mould(int arity, std::vector<FractionTerm<K>> terms)
      : arity_(arity), terms_(std::move(terms)) {
    check_arity();
    check_indices();
    canon();
  }

  static Mould zero(int arity) { return Mould(arity); }
  static Mould constant(int arity, K c) {
    Mould m(arity);
    if (!moulds::is_zero(c)) m.terms_.push_back({std::move(c), {}, {}});
    return m;
  }

  int arity() const { return arity_; }
  const std::vector<FractionTerm<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const Mould& o) const {
    if (arity_ != o.arity_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
      const auto& a = terms_[i];
      const auto& b = o.terms_[i];
      if (a.coeff != b.coeff || a.numer != b.numer || a.denom != b.denom)
        return false;
    }
    return true;
  }
  bool operator!=(const Mould& o) const { return !(*this == o); }

  Mould operator+(const Mould& o) const {
    require_same_arity(o);
    std::vector<FractionTerm<K>> ts(terms_);
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return Mould(arity_, std::move(ts));
  }
  Mould operator-() const {
    std::vector<FractionTerm<K>> ts(terms_);
    for (auto& t : ts) t.coeff = -t.coeff;
    Mould m(arity_);
    m.terms_ = std::move(ts);  // negation preserves canonical order
    return m;
  }
  Mould operator-(const Mould& o) const { return *this + (-o); }

  Mould scaled(const K& c) const {
    if (moulds::is_zero(c)) return Mould(arity_);
    std::vector<FractionTerm<K>> ts(terms_);
    for (auto& t : ts) t.coeff = t.coeff * c;
    return Mould(arity_, std::move(ts));
  }

  // pointwise product of two rational functions in the same variables
  Mould multiply(const Mould& o) const {
    require_same_arity(o);
    std::vector<FractionTerm<K>> ts;
    ts.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) {
        FractionTerm<K> t;
        t.coeff = a.coeff * b.coeff;
        t.numer = a.numer;
        for (const auto& [v, e] : b.numer) t.numer[v] += e;
        t.denom = a.denom;
        t.denom.insert(t.denom.end(), b.denom.begin(), b.denom.end());
        ts.push_back(std::move(t));
      }
    return Mould(arity_, std::move(ts));
  }

  Mould multiply_by_form(const LinearForm& form) const {
    LinearForm norm = form;
    Rational scale = norm.normalize();
    if (norm.empty()) return Mould(arity_);
    std::vector<FractionTerm<K>> ts;
    for (const auto& t : terms_) {
      auto hit = std::find(t.denom.begin(), t.denom.end(), norm);
      if (hit != t.denom.end()) {
        FractionTerm<K> nt;
        nt.coeff = t.coeff * CoeffTraits<K>::from_rational(scale);
        nt.numer = t.numer;
        nt.denom.assign(t.denom.begin(), hit);
        nt.denom.insert(nt.denom.end(), std::next(hit), t.denom.end());
        ts.push_back(std::move(nt));
      } else {
        for (const auto& [v, c] : norm.entries()) {
          FractionTerm<K> nt = t;
          nt.coeff = nt.coeff * CoeffTraits<K>::from_rational(scale * Rational(c));
          nt.numer[v] += 1;
          ts.push_back(std::move(nt));
        }
      }
    }
    return Mould(arity_, std::move(ts));
  }

  // simultaneous substitution u_v -> images[v-1]; images must cover the
  // current arity, the result lives on u_1..u_new_arity
  Mould substitute(const std::vector<LinearForm>& images, int new_arity) const {
    if (static_cast<int>(images.size()) != arity_)
      throw InvalidInputError("substitution image count must match arity");
    std::vector<FractionTerm<K>> out;
    for (const auto& t : terms_) {
      std::vector<LinearForm> denom;
      denom.reserve(t.denom.size());
      for (const auto& f : t.denom) {
        LinearForm img;
        for (const auto& [v, c] : f.entries())
          img = img + images[static_cast<size_t>(v - 1)].scaled(c);
        if (img.empty())
          throw PoleError("substitution sends a denominator form to zero");
        denom.push_back(std::move(img));
      }
      // expand the image of the numerator monomial into monomial summands
      std::vector<std::pair<Monomial, Integer>> expansion{{Monomial{}, Integer(1)}};
      for (const auto& [v, e] : t.numer) {
        const LinearForm& img = images[static_cast<size_t>(v - 1)];
        for (int rep = 0; rep < e; ++rep) {
          std::vector<std::pair<Monomial, Integer>> next;
          next.reserve(expansion.size() * img.size());
          for (const auto& [mono, c0] : expansion)
            for (const auto& [w, c] : img.entries()) {
              Monomial m2 = mono;
              m2[w] += 1;
              next.emplace_back(std::move(m2), c0 * c);
            }
          expansion = std::move(next);
        }
      }
      for (auto& [mono, c] : expansion) {
        FractionTerm<K> nt;
        nt.coeff = t.coeff * CoeffTraits<K>::from_rational(Rational(c));
        nt.numer = std::move(mono);
        nt.denom = denom;
        out.push_back(std::move(nt));
      }
    }
    return Mould(new_arity, std::move(out));
  }

  K eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_)
      throw InvalidInputError("evaluation point length must match arity");
    K acc = CoeffTraits<K>::from_rational(Rational(0));
    for (const auto& t : terms_) {
      Rational val(1);
      for (const auto& [v, e] : t.numer)
        val *= rat_pow(point[static_cast<size_t>(v - 1)], e);
      for (const auto& f : t.denom) {
        Rational d = f.eval(point);
        if (d == 0) throw PoleError("denominator form " + f.str() + " vanishes");
        val /= d;
      }
      acc = acc + t.coeff * CoeffTraits<K>::from_rational(val);
    }
    return acc;
  }

 private:
  void check_arity() const {
    if (arity_ < 0) throw InvalidInputError("negative arity");
  }
  void require_same_arity(const Mould& o) const {
    if (arity_ != o.arity_) throw InvalidInputError("arity mismatch");
  }
  void check_indices() const {
    for (const auto& t : terms_) {
      for (const auto& [v, e] : t.numer)
        if (v < 1 || v > arity_ || e < 1)
          throw InvalidInputError("numerator variable out of range");
      for (const auto& f : t.denom) {
        if (f.empty()) throw InvalidInputError("empty linear form in denominator");
        if (f.max_index() > arity_)
          throw InvalidInputError("denominator variable out of range");
      }
    }
  }

  void canon() {
    for (auto& t : terms_) {
      Rational scale(1);
      for (auto& f : t.denom) scale /= f.normalize();
      if (scale != 1) t.coeff = t.coeff * CoeffTraits<K>::from_rational(scale);
      // cancel u_v in the numerator against single-variable denominator forms
      std::vector<LinearForm> keep;
      keep.reserve(t.denom.size());
      for (auto& f : t.denom) {
        if (f.is_single_var()) {
          auto it = t.numer.find(f.single_var());
          if (it != t.numer.end()) {
            if (--(it->second) == 0) t.numer.erase(it);
            continue;
          }
        }
        keep.push_back(std::move(f));
      }
      t.denom = std::move(keep);
      std::sort(t.denom.begin(), t.denom.end());
    }
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
      if (a.denom != b.denom) return a.denom < b.denom;
      return a.numer < b.numer;
    });
    std::vector<FractionTerm<K>> merged;
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().numer == t.numer &&
          merged.back().denom == t.denom) {
        merged.back().coeff = merged.back().coeff + t.coeff;
        if (moulds::is_zero(merged.back().coeff)) merged.pop_back();
      } else if (!moulds::is_zero(t.coeff)) {
        merged.push_back(std::move(t));
      }
    }
    terms_ = std::move(merged);
  }

  int arity_ = 0;
  std::vector<FractionTerm<K>> terms_;
};

using RatMould = Mould<Rational>;
using QMould = Mould<QRatCoeff>;

// f_sigma = 1 / (u_{s1} (u_{s1}+u_{s2}) ... (u_{s1}+...+u_{sn}))
template <class K = Rational>
Mould<K> perm_mould(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  FractionTerm<K> t;
  t.coeff = CoeffTraits<K>::from_rational(Rational(1));
  std::vector<std::pair<int, Integer>> partial;
  for (int k = 0; k < n; ++k) {
    partial.emplace_back(sigma[static_cast<size_t>(k)], Integer(1));
    t.denom.push_back(LinearForm(partial));
  }
  return Mould<K>(n, {std::move(t)});
}

template <class K = Rational>
Mould<K> identity_mould(int n) {
  std::vector<int> id(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i + 1;
  return perm_mould<K>(id);
}

// residue: (u_var * m) restricted to u_var = 0, taken termwise.
// The dead variable keeps its slot so indices never shift.
template <class K>
Mould<K> residue_step(const Mould<K>& m, int var) {
  if (var < 1 || var > m.arity()) throw IndexError("residue variable out of range");
  std::vector<FractionTerm<K>> out;
  for (const auto& t : m.terms()) {
    int singles = 0;
    for (const auto& f : t.denom)
      if (f.is_single_var() && f.single_var() == var) ++singles;
    int expo = 0;
    if (auto it = t.numer.find(var); it != t.numer.end()) expo = it->second;
    if (singles >= expo + 2)
      throw HigherPoleError("pole of order >= 2 in u" + std::to_string(var));
    if (singles != expo + 1) continue;  // factor u_var survives, value 0
    FractionTerm<K> nt;
    nt.coeff = t.coeff;
    nt.numer = t.numer;
    nt.numer.erase(var);
    for (const auto& f : t.denom) {
      if (f.is_single_var() && f.single_var() == var) continue;
      LinearForm g = f.drop_var(var);
      if (g.empty()) throw HigherPoleError("form collapses at u" + std::to_string(var) + " = 0");
      nt.denom.push_back(std::move(g));
    }
    out.push_back(std::move(nt));
  }
  return Mould<K>(m.arity(), std::move(out));
}

// u_k -> u_{k+1} for k < n, u_n -> -(u_1 + ... + u_n)
template <class K>
Mould<K> gamma(const Mould<K>& m) {
  int n = m.arity();
  if (n < 1) throw InvalidInputError("gamma needs arity >= 1");
  std::vector<LinearForm> images;
  images.reserve(static_cast<size_t>(n));
  for (int k = 1; k < n; ++k) images.push_back(LinearForm::var(k + 1));
  images.push_back(-LinearForm::sum_range(1, n));
  return m.substitute(images, n);
}

// m with argument slot j fed by u_{w[j-1]}
template <class K>
Mould<K> permute_vars(const Mould<K>& m, const std::vector<int>& w, int new_arity) {
  std::vector<LinearForm> images;
  images.reserve(w.size());
  for (int v : w) images.push_back(LinearForm::var(v));
  return m.substitute(images, new_arity);
}

// (u_i+...+u_{i+n-1}) * f(u_1,..,u_{i-1},U,u_{i+n},..) * g(u_i,..,u_{i+n-1})
template <class K>
Mould<K> compose_at(const Mould<K>& f, int i, const Mould<K>& g) {
  int m = f.arity(), n = g.arity();
  if (i < 1 || i > m) throw IndexError("composition slot out of range");
  if (n < 1) throw InvalidInputError("inner mould must have arity >= 1");
  int total = m + n - 1;
  LinearForm U = LinearForm::sum_range(i, i + n - 1);
  std::vector<LinearForm> fimg;
  fimg.reserve(static_cast<size_t>(m));
  for (int w = 1; w <= m; ++w) {
    if (w < i)
      fimg.push_back(LinearForm::var(w));
    else if (w == i)
      fimg.push_back(U);
    else
      fimg.push_back(LinearForm::var(w + n - 1));
  }
  std::vector<LinearForm> gimg;
  gimg.reserve(static_cast<size_t>(n));
  for (int w = 1; w <= n; ++w) gimg.push_back(LinearForm::var(w + i - 1));
  Mould<K> fpart = f.substitute(fimg, total);
  Mould<K> gpart = g.substitute(gimg, total);
  return fpart.multiply(gpart).multiply_by_form(U);
}

// sum of f o_i g over every slot i of f
template <class K>
Mould<K> operadic_prelie(const Mould<K>& f, const Mould<K>& g) {
  Mould<K> acc(f.arity() + g.arity() - 1);
  for (int i = 1; i <= f.arity(); ++i) acc = acc + compose_at(f, i, g);
  return acc;
}

// f(u_1..u_n) * g(u_1+...+u_{n+1}, u_{n+2}, ..., u_{n+m})
template <class K>
Mould<K> over(const Mould<K>& f, const Mould<K>& g) {
  int n = f.arity(), m = g.arity();
  if (n < 1 || m < 1) throw InvalidInputError("over needs arity >= 1 operands");
  int total = n + m;
  std::vector<LinearForm> fimg;
  for (int w = 1; w <= n; ++w) fimg.push_back(LinearForm::var(w));
  std::vector<LinearForm> gimg;
  gimg.push_back(LinearForm::sum_range(1, n + 1));
  for (int w = 2; w <= m; ++w) gimg.push_back(LinearForm::var(w + n));
  return f.substitute(fimg, total).multiply(g.substitute(gimg, total));
}

// f(u_1,..,u_{n-1}, u_n+...+u_{n+m}) * g(u_{n+1}, ..., u_{n+m})
template <class K>
Mould<K> under(const Mould<K>& f, const Mould<K>& g) {
  int n = f.arity(), m = g.arity();
  if (n < 1 || m < 1) throw InvalidInputError("under needs arity >= 1 operands");
  int total = n + m;
  std::vector<LinearForm> fimg;
  for (int w = 1; w < n; ++w) fimg.push_back(LinearForm::var(w));
  fimg.push_back(LinearForm::sum_range(n, n + m));
  std::vector<LinearForm> gimg;
  for (int w = 1; w <= m; ++w) gimg.push_back(LinearForm::var(w + n));
  return f.substitute(fimg, total).multiply(g.substitute(gimg, total));
}

// Probabilistic identity test. The difference is exact in two easy cases
// (empty canonical form; all terms over one common denominator multiset,
// where distinct monomials with nonzero coefficients cannot cancel).
// Otherwise Schwartz-Zippel with the shared probe distribution; points that
// hit a pole are re-drawn.
template <class K>
bool equal(const Mould<K>& a, const Mould<K>& b, int trials = 20,
           std::uint64_t seed = kDefaultSeed) {
  if (a.arity() != b.arity()) throw InvalidInputError("arity mismatch in equal");
  Mould<K> diff = a - b;
  if (diff.is_zero()) return true;
  bool common = true;
  for (size_t i = 1; i < diff.terms().size() && common; ++i)
    common = diff.terms()[i].denom == diff.terms()[0].denom;
  if (common) return false;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 100) throw PoleError("could not find a pole-free probe point");
      std::vector<Rational> pt = random_probe_point(rng, diff.arity());
      try {
        if (!is_zero(diff.eval(pt))) return false;
        break;
      } catch (const PoleError&) {
      }
    }
  }
  return true;
}

inline Mould<Rational> specialize_q(const Mould<QRatCoeff>& m, const Rational& q0) {
  std::vector<FractionTerm<Rational>> ts;
  ts.reserve(m.terms().size());
  for (const auto& t : m.terms()) {
    FractionTerm<Rational> nt;
    nt.coeff = t.coeff.eval(q0);
    nt.numer = t.numer;
    nt.denom = t.denom;
    ts.push_back(std::move(nt));
  }
  return Mould<Rational>(m.arity(), std::move(ts));
}

inline Mould<QRatCoeff> lift_to_q(const Mould<Rational>& m) {
  std::vector<FractionTerm<QRatCoeff>> ts;
  ts.reserve(m.terms().size());
  for (const auto& t : m.terms())
    ts.push_back({QRatCoeff(t.coeff), t.numer, t.denom});
  return Mould<QRatCoeff>(m.arity(), std::move(ts));
}

}  // namespace moulds

#endif
