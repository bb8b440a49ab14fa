#ifndef MOULDS_FREESERIES_HPP
#define MOULDS_FREESERIES_HPP

#include <map>

#include "moulds/permutation.hpp"
#include "moulds/rational.hpp"

namespace moulds {

// degree of a word in the free algebra on g_1, g_2, ... with deg(g_i) = i
int word_degree(const Word& w);

// Truncated series in the free associative algebra on graded generators.
// Words above the truncation degree are discarded on every operation.
class FreeSeries {
 public:
  explicit FreeSeries(int max_degree);
  static FreeSeries one(int max_degree);
  static FreeSeries generator(int max_degree, int i);
  static FreeSeries word_elt(int max_degree, const Word& w,
                             const Rational& c = Rational(1));

  int max_degree() const { return n_; }
  const std::map<Word, Rational>& coeffs() const { return c_; }
  Rational coeff(const Word& w) const;
  void add_term(const Word& w, const Rational& c);
  bool is_zero() const { return c_.empty(); }

  bool operator==(const FreeSeries& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const FreeSeries& o) const { return !(*this == o); }

  FreeSeries operator+(const FreeSeries& o) const;
  FreeSeries operator-(const FreeSeries& o) const;
  FreeSeries operator-() const;
  FreeSeries operator*(const FreeSeries& o) const;
  FreeSeries scaled(const Rational& c) const;

  FreeSeries component(int degree) const;        // total-degree slice
  FreeSeries length_component(int length) const; // word-length slice

  FreeSeries exp() const;  // needs zero constant term
  FreeSeries log() const;  // needs constant term 1

 private:
  int n_;
  std::map<Word, Rational> c_;
};

FreeSeries bracket(const FreeSeries& a, const FreeSeries& b);

// classical projector: each word of length l maps to its left-nested
// bracketing divided by l; fixes Lie elements
FreeSeries dsw_project(const FreeSeries& x);
bool is_lie(const FreeSeries& x);

}  // namespace moulds

#endif
