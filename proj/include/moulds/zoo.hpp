#ifndef MOULDS_ZOO_HPP
#define MOULDS_ZOO_HPP

#include <functional>
#include <vector>

#include "moulds/fqsym.hpp"
#include "moulds/freeseries.hpp"
#include "moulds/mould.hpp"
#include "moulds/permutation.hpp"

namespace moulds {

RatMould uniform_mould(int n);      // 1/(u_1...u_n)
RatMould timeordered_mould(int n);  // 1/(u_1(u_1+u_2)...(u_1+...+u_n))

// u_p / (u_1...u_n (u_1+...+u_n)) with n = p+q
RatMould ypq_mould(int p, int q);

QMould ty_mould(int n);     // sum alpha^{i-1} y_{i,n-i}, alpha formal
RatMould liny_mould(int n); // sum i y_{i,n-i}
QMould qliny_mould(int n);  // sum [i]_q y_{i,n-i}
RatMould cm_mould(int n);   // (1/n!) sum (-1)^{n-k} C(n,k) k y_{k,n-k}

FQSymElt<Rational> solomon_fsym(int n);
FQSymElt<QRatCoeff> qsolomon_fsym(int n);
FQSymElt<Rational> dynkin_fsym(int n);

// (1/u_1) prod_{i=2}^n (u_1+...+u_{i-1}+q u_i) / (u_i (u_1+...+u_i))
QMould po_mould(int n);

inline int saillances(const Permutation& sigma) { return saillance_count(sigma); }

// shuffle criterion: every (p,q)-shuffle sum of permuted-variable copies
// vanishes (alternal) or factors through the lower-arity values (symmetral)
template <class K>
bool alternality_check(const Mould<K>& m, int trials = 20,
                       std::uint64_t seed = kDefaultSeed) {
  int n = m.arity();
  for (int p = 1; p < n; ++p) {
    Word left, right;
    for (int j = 1; j <= p; ++j) left.push_back(j);
    for (int j = p + 1; j <= n; ++j) right.push_back(j);
    Mould<K> acc(n);
    for (const Word& w : shuffle(left, right)) acc = acc + permute_vars(m, w, n);
    if (!equal(acc, Mould<K>::zero(n), trials, seed)) return false;
  }
  return true;
}

template <class K>
using MouldFamilyT = std::function<Mould<K>(int)>;
using MouldFamily = MouldFamilyT<Rational>;

template <class K>
bool symmetrality_check(const MouldFamilyT<K>& family, int n, int trials = 20,
                        std::uint64_t seed = kDefaultSeed) {
  Mould<K> top = family(n);
  if (top.arity() != n) throw InvalidInputError("family arity mismatch");
  for (int p = 1; p < n; ++p) {
    int q = n - p;
    Word left, right;
    for (int j = 1; j <= p; ++j) left.push_back(j);
    for (int j = p + 1; j <= n; ++j) right.push_back(j);
    Mould<K> lhs(n);
    for (const Word& w : shuffle(left, right)) lhs = lhs + permute_vars(top, w, n);
    Mould<K> rhs = permute_vars(family(p), left, n)
                       .multiply(permute_vars(family(q), right, n));
    if (!equal(lhs, rhs, trials, seed)) return false;
  }
  return true;
}

// Taylor coefficients c_1..c_N of the scalar specialization: c_k sums
// f_n(i_1..i_n) prod a_{i_j} over tuples with i_1+...+i_n = k. Tuples whose
// a-product vanishes are skipped before any mould evaluation.
std::vector<Rational> scalar_apply(const MouldFamily& family,
                                   const std::vector<Rational>& a, int N);

// free-algebra specialization: coefficient of the word (i_1..i_n) is
// f_n(i_1,..,i_n); with_unit adds the empty-word constant 1
FreeSeries nc_apply(const MouldFamily& family, int N, bool with_unit = false);

}  // namespace moulds

#endif
