#ifndef MOULDS_FQSYM_HPP
#define MOULDS_FQSYM_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "moulds/errors.hpp"
#include "moulds/mould.hpp"
#include "moulds/permutation.hpp"

namespace moulds {

// Sparse combination of basis words f_w. Keys are words with distinct
// letters; in almost every use they are permutations of 1..n. The arity is
// the number of ambient u-variables, i.e. at least the largest letter used.
template <class K>
class FQSymElt {
 public:
  explicit FQSymElt(int arity = 0) : arity_(arity) {}
  FQSymElt(int arity, std::map<Word, K> coeffs)
      : arity_(arity), c_(std::move(coeffs)) {
    for (auto it = c_.begin(); it != c_.end();) {
      check_word(it->first);
      it = moulds::is_zero(it->second) ? c_.erase(it) : std::next(it);
    }
  }

  static FQSymElt basis(const Word& w) {
    int m = 0;
    for (int x : w) m = std::max(m, x);
    FQSymElt e(m);
    e.check_word(w);
    e.c_[w] = CoeffTraits<K>::from_rational(Rational(1));
    return e;
  }

  int arity() const { return arity_; }
  const std::map<Word, K>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  K coeff(const Word& w) const {
    auto it = c_.find(w);
    return it == c_.end() ? CoeffTraits<K>::from_rational(Rational(0)) : it->second;
  }

  bool operator==(const FQSymElt& o) const { return arity_ == o.arity_ && c_ == o.c_; }
  bool operator!=(const FQSymElt& o) const { return !(*this == o); }

  FQSymElt operator+(const FQSymElt& o) const {
    // the arity-0 zero element is neutral for any arity
    if (arity_ == 0 && c_.empty()) return o;
    if (o.arity_ == 0 && o.c_.empty()) return *this;
    require_same_arity(o);
    FQSymElt r(*this);
    for (const auto& [w, c] : o.c_) r.accumulate(w, c);
    return r;
  }
  FQSymElt operator-() const {
    FQSymElt r(*this);
    for (auto& [w, c] : r.c_) c = -c;
    return r;
  }
  FQSymElt operator-(const FQSymElt& o) const { return *this + (-o); }
  FQSymElt scaled(const K& k) const {
    FQSymElt r(arity_);
    if (moulds::is_zero(k)) return r;
    for (const auto& [w, c] : c_) r.c_[w] = c * k;
    return r;
  }

  void accumulate(const Word& w, const K& c) {
    check_word(w);
    auto [it, inserted] = c_.try_emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (moulds::is_zero(it->second)) c_.erase(it);
    } else if (moulds::is_zero(it->second)) {
      c_.erase(it);
    }
  }

  Mould<K> to_mould() const {
    std::vector<FractionTerm<K>> ts;
    ts.reserve(c_.size());
    for (const auto& [w, c] : c_) {
      FractionTerm<K> t;
      t.coeff = c;
      std::vector<std::pair<int, Integer>> partial;
      for (int x : w) {
        partial.emplace_back(x, Integer(1));
        t.denom.push_back(LinearForm(partial));
      }
      ts.push_back(std::move(t));
    }
    return Mould<K>(arity_, std::move(ts));
  }

 private:
  void check_word(const Word& w) const {
    std::vector<int> sorted(w);
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] < 1 || sorted[i] > arity_)
        throw InvalidInputError("basis word letter out of range");
      if (i && sorted[i] == sorted[i - 1])
        throw InvalidInputError("basis word letters must be distinct");
    }
  }
  void require_same_arity(const FQSymElt& o) const {
    if (arity_ != o.arity_) throw InvalidInputError("arity mismatch");
  }

  int arity_ = 0;
  std::map<Word, K> c_;
};

namespace detail {
inline int max_letter(const Word& w) {
  int m = 0;
  for (int x : w) m = std::max(m, x);
  return m;
}
inline bool letters_disjoint(const Word& a, const Word& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) return false;
  return true;
}
inline Word shifted(const Word& w, int offset) {
  Word r(w);
  for (int& x : r) x += offset;
  return r;
}
}  // namespace detail

namespace detail {
template <class K>
void add_to(std::map<Word, K>& acc, const Word& w, const K& c) {
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) it->second = it->second + c;
}
}  // namespace detail

// F_v * F_w = sum of shuffles of v with w shifted past v; words that are
// already letter-disjoint are shuffled as they stand. The result lives at
// the smallest arity covering every letter produced.
template <class K>
FQSymElt<K> product(const FQSymElt<K>& a, const FQSymElt<K>& b) {
  std::map<Word, K> acc;
  int arity = std::max(a.arity(), b.arity());
  for (const auto& [v, cv] : a.coeffs())
    for (const auto& [w, cw] : b.coeffs()) {
      Word rhs = detail::letters_disjoint(v, w)
                     ? w
                     : detail::shifted(w, detail::max_letter(v));
      arity = std::max({arity, detail::max_letter(v), detail::max_letter(rhs)});
      K c = cv * cw;
      for (const Word& s : shuffle(v, rhs)) detail::add_to(acc, s, c);
    }
  return FQSymElt<K>(arity, std::move(acc));
}

// half-products split by the provenance of the last letter
template <class K>
FQSymElt<K> dend_prec(const FQSymElt<K>& a, const FQSymElt<K>& b) {
  if (a.arity() < 1 || b.arity() < 1)
    throw EmptyOperandError("dendriform operand of arity 0");
  std::map<Word, K> acc;
  int arity = std::max(a.arity(), b.arity());
  for (const auto& [v, cv] : a.coeffs()) {
    if (v.empty()) throw EmptyOperandError("dendriform operand of arity 0");
    for (const auto& [w, cw] : b.coeffs()) {
      if (w.empty()) throw EmptyOperandError("dendriform operand of arity 0");
      Word rhs = detail::letters_disjoint(v, w)
                     ? w
                     : detail::shifted(w, detail::max_letter(v));
      arity = std::max({arity, detail::max_letter(v), detail::max_letter(rhs)});
      Word head(v.begin(), std::prev(v.end()));
      K c = cv * cw;
      for (Word s : shuffle(head, rhs)) {
        s.push_back(v.back());
        detail::add_to(acc, s, c);
      }
    }
  }
  return FQSymElt<K>(arity, std::move(acc));
}

template <class K>
FQSymElt<K> dend_succ(const FQSymElt<K>& a, const FQSymElt<K>& b) {
  if (a.arity() < 1 || b.arity() < 1)
    throw EmptyOperandError("dendriform operand of arity 0");
  std::map<Word, K> acc;
  int arity = std::max(a.arity(), b.arity());
  for (const auto& [v, cv] : a.coeffs()) {
    if (v.empty()) throw EmptyOperandError("dendriform operand of arity 0");
    for (const auto& [w, cw] : b.coeffs()) {
      if (w.empty()) throw EmptyOperandError("dendriform operand of arity 0");
      Word rhs = detail::letters_disjoint(v, w)
                     ? w
                     : detail::shifted(w, detail::max_letter(v));
      arity = std::max({arity, detail::max_letter(v), detail::max_letter(rhs)});
      Word head(rhs.begin(), std::prev(rhs.end()));
      K c = cv * cw;
      for (Word s : shuffle(v, head)) {
        s.push_back(rhs.back());
        detail::add_to(acc, s, c);
      }
    }
  }
  return FQSymElt<K>(arity, std::move(acc));
}

template <class K>
FQSymElt<K> prelie(const FQSymElt<K>& a, const FQSymElt<K>& b) {
  return dend_succ(a, b) - dend_prec(b, a);
}

// anticyclic action on basis permutations: sigma'(i) = sigma(i)+1 mod n,
// split sigma' = u.1.w, then gamma f_sigma = (-1)^{|v|} sum over u shuffle v
// with v = 1.reverse(w)
template <class K>
FQSymElt<K> gamma_fsym(const FQSymElt<K>& a) {
  int n = a.arity();
  FQSymElt<K> out(n);
  for (const auto& [sigma, c] : a.coeffs()) {
    if (!is_permutation(sigma))
      throw InvalidInputError("gamma needs permutation basis words");
    Word prime(sigma);
    for (int& x : prime) x = (x == n) ? 1 : x + 1;
    auto one = std::find(prime.begin(), prime.end(), 1);
    Word u(prime.begin(), one);
    Word w(std::next(one), prime.end());
    Word v{1};
    v.insert(v.end(), w.rbegin(), w.rend());
    K signed_c = (v.size() % 2 == 1) ? -c : c;
    for (const Word& tau : shuffle(u, v)) out.accumulate(tau, signed_c);
  }
  return out;
}

// c_sigma is read off by iterated residues in the order sigma_1, sigma_2, ...;
// the reconstruction is re-verified against the input before returning
template <class K>
FQSymElt<K> decompose_fsym(const Mould<K>& m, int trials = 20,
                           std::uint64_t seed = kDefaultSeed) {
  int n = m.arity();
  FQSymElt<K> out(n);
  Permutation prefix;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  auto rec = [&](auto&& self, const Mould<K>& cur) -> void {
    if (static_cast<int>(prefix.size()) == n) {
      if (cur.is_zero()) return;
      if (cur.terms().size() != 1 || !cur.terms()[0].numer.empty() ||
          !cur.terms()[0].denom.empty())
        throw NotInSpanError("nonconstant remainder after full residue chain");
      out.accumulate(prefix, cur.terms()[0].coeff);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      Mould<K> next = residue_step(cur, v);
      if (next.is_zero()) continue;
      used[static_cast<size_t>(v)] = true;
      prefix.push_back(v);
      self(self, next);
      prefix.pop_back();
      used[static_cast<size_t>(v)] = false;
    }
  };
  try {
    rec(rec, m);
  } catch (const HigherPoleError&) {
    throw NotInSpanError("mould has a pole of order >= 2");
  }
  if (!equal(m, out.to_mould(), trials, seed))
    throw NotInSpanError("mould is not a combination of the f_sigma");
  return out;
}

template <class K>
FQSymElt<K> compose_at(const FQSymElt<K>& a, int i, const FQSymElt<K>& b) {
  return decompose_fsym(compose_at(a.to_mould(), i, b.to_mould()));
}

template <class K>
FQSymElt<K> operadic_prelie(const FQSymElt<K>& a, const FQSymElt<K>& b) {
  if (a.arity() < 1) throw InvalidInputError("operadic preLie needs arity >= 1");
  FQSymElt<K> acc = compose_at(a, 1, b);
  for (int i = 2; i <= a.arity(); ++i) acc = acc + compose_at(a, i, b);
  return acc;
}

inline FQSymElt<Rational> specialize_q(const FQSymElt<QRatCoeff>& a, const Rational& q0) {
  std::map<Word, Rational> out;
  for (const auto& [w, c] : a.coeffs()) {
    Rational v = c.eval(q0);
    if (v != 0) out.emplace(w, v);
  }
  return FQSymElt<Rational>(a.arity(), std::move(out));
}

}  // namespace moulds

#endif
