#ifndef MOULDS_LINEAR_FORM_HPP
#define MOULDS_LINEAR_FORM_HPP

#include <string>
#include <utility>
#include <vector>

#include "moulds/rational.hpp"

namespace moulds {

// Integer linear combination of the variables u_1, u_2, ...
// Entries are kept sorted by variable index with nonzero coefficients.
// Denominator forms are stored normalized: content 1, first coefficient
// positive; the extracted rational scale lives in the owning term's coeff.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<std::pair<int, Integer>> entries);

  static LinearForm var(int i);
  static LinearForm sum_range(int lo, int hi);  // u_lo + ... + u_hi

  bool empty() const { return e_.empty(); }
  size_t size() const { return e_.size(); }
  const std::vector<std::pair<int, Integer>>& entries() const { return e_; }
  Integer coeff_of(int v) const;
  bool is_single_var() const { return e_.size() == 1; }
  int single_var() const { return e_.front().first; }
  int max_index() const { return e_.empty() ? 0 : e_.back().first; }

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-() const;
  LinearForm scaled(const Integer& k) const;

  // replace u_v by the given image form (scaled by the old coefficient)
  LinearForm substitute(int v, const LinearForm& image) const;
  LinearForm drop_var(int v) const;  // set u_v = 0

  Rational eval(const std::vector<Rational>& point) const;  // point[i-1] = u_i

  // divide out the content and fix the sign of the lowest-index coefficient;
  // returns the extracted factor, so old = factor * new
  Rational normalize();

  bool operator==(const LinearForm& o) const { return e_ == o.e_; }
  bool operator!=(const LinearForm& o) const { return e_ != o.e_; }
  bool operator<(const LinearForm& o) const;

  std::string str() const;  // "u1+2u2-u4"

 private:
  std::vector<std::pair<int, Integer>> e_;
};

}  // namespace moulds

#endif
