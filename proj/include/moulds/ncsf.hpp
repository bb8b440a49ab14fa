#ifndef MOULDS_NCSF_HPP
#define MOULDS_NCSF_HPP

#include <functional>
#include <map>
#include <vector>

#include "moulds/freeseries.hpp"
#include "moulds/permutation.hpp"
#include "moulds/qpoly.hpp"
#include "moulds/rational.hpp"

namespace moulds {

// composition of n: finite sequence of positive parts
using Composition = std::vector<int>;

std::vector<Composition> compositions(int n);
Integer composition_product(const Composition& I);  // product of the parts

// complete functions on the elementary basis: coefficient of Lambda^I in S_n
std::map<Composition, Rational> s_in_lambda(int n);

// complete functions on power sums of the first kind: coefficient of Psi^I
std::map<Composition, Rational> s_in_psi(int n);

// Magnus direction: coefficient of Phi^K in Psi_n
std::map<Composition, Rational> psi_in_phi(int n);

// integral of t_1^{a_1}...t_r^{a_r} over 0 < t_r < ... < t_1 < 1
Rational simplex_integral(const std::vector<long>& exponents);

// continuous BCH direction: coefficient of Psi^I in Phi_n
std::map<Composition, Rational> phi_in_psi(int n);

// expand a product X_{k_1}...X_{k_r} given the expansion of each X_m in a
// common multiplicative basis: sums over splittings of the target composition
std::map<Composition, Rational> expand_word(
    const std::function<std::map<Composition, Rational>(int)>& table,
    const Composition& K);

// Z_1..Z_N with sigma(t) = exp(Z_1 t) exp(Z_2 t^2/2) ... ; words are in the
// Psi generators (letter k = Psi_k)
std::vector<FreeSeries> zassenhaus(int N);

// coefficient of sigma in the one-parameter Lie idempotent family
std::map<Permutation, QRatCoeff> phi_q(int n);

// interpret permutation coefficients as sum of words g_{sigma(1)}...g_{sigma(n)}
FreeSeries perm_combination(const std::map<Permutation, Rational>& coeffs, int n);

}  // namespace moulds

#endif
