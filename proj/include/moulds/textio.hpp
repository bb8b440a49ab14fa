#ifndef MOULDS_TEXTIO_HPP
#define MOULDS_TEXTIO_HPP

#include <string>

#include "moulds/fqsym.hpp"
#include "moulds/mould.hpp"
#include "moulds/ncsf.hpp"

namespace moulds {

// canonical text form: terms joined by " + "/" - ", each
// "coeff [* monomial] / [form][form]...", e.g. "1 / [u4][u1+u4]"
std::string format_mould(const RatMould& m);
std::string format_mould(const QMould& m);

// accepts the canonical form plus (...) groups and '*'-separated factors
// inside one group, e.g. "1/(u1*u2)"; arity -1 infers the max variable index
RatMould parse_mould(const std::string& text, int arity = -1);

std::string format_fqsym(const FQSymElt<Rational>& e);
std::string format_fqsym(const FQSymElt<QRatCoeff>& e);

std::string latex_rational(const Rational& r);
std::string latex_mould(const RatMould& m);
std::string latex_mould(const QMould& m);
std::string latex_fqsym(const FQSymElt<Rational>& e);
std::string latex_fqsym(const FQSymElt<QRatCoeff>& e);
std::string latex_composition(const Composition& I, const std::string& letter);

}  // namespace moulds

#endif
