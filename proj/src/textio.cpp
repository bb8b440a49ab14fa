#include "moulds/textio.hpp"

#include <algorithm>
#include <cctype>

#include "moulds/errors.hpp"

namespace moulds {

namespace {

std::string monomial_str(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m)
    for (int k = 0; k < e; ++k) {
      if (!out.empty()) out += "*";
      out += "u" + std::to_string(v);
    }
  return out;
}

// true when the printed coefficient needs parentheses next to other factors
bool composite_str(const std::string& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '+' || c == '/' || c == ' ') return true;
    if (c == '-' && i > 0) return true;
  }
  return false;
}

std::string coeff_str(const Rational& c) { return to_string(c); }

std::string coeff_str(const QRatCoeff& c) {
  std::string s = c.str();
  return composite_str(s) ? "(" + s + ")" : s;
}

bool coeff_negative(const Rational& c) { return c < 0; }
bool coeff_negative(const QRatCoeff& c) { return c.num().leading() < 0; }

template <class K>
std::string term_body(const FractionTerm<K>& t, const K& shown_coeff) {
  std::string out = coeff_str(shown_coeff);
  if (!t.numer.empty()) out += " * " + monomial_str(t.numer);
  if (!t.denom.empty()) {
    out += " / ";
    for (const auto& f : t.denom) out += "[" + f.str() + "]";
  }
  return out;
}

template <class K>
std::string format_mould_impl(const Mould<K>& m) {
  if (m.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < m.terms().size(); ++i) {
    const auto& t = m.terms()[i];
    bool neg = coeff_negative(t.coeff);
    K shown = neg ? -t.coeff : t.coeff;
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += term_body(t, shown);
  }
  return out;
}

}  // namespace

std::string format_mould(const RatMould& m) { return format_mould_impl(m); }
std::string format_mould(const QMould& m) { return format_mould_impl(m); }

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  // the middle dot U+00B7 separates factors in some sources; treat as '*'
  bool eat_times() {
    if (eat('*')) return true;
    skip_ws();
    if (pos_ + 1 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xC2 &&
        static_cast<unsigned char>(s_[pos_ + 1]) == 0xB7) {
      pos_ += 2;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos_));
  }
  bool at_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  Integer integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected integer");
    return Integer(s_.substr(start, pos_ - start));
  }
  int var_index() {
    skip_ws();
    if (peek() != 'u') fail("expected variable");
    ++pos_;
    Integer v = integer();
    if (v < 1 || v > 1000000) fail("variable index out of range");
    return static_cast<int>(v.get_si());
  }
  size_t pos() const { return pos_; }
  void seek(size_t p) { pos_ = p; }

 private:
  const std::string& s_;
  size_t pos_ = 0;
};

LinearForm parse_form(Cursor& c) {
  std::vector<std::pair<int, Integer>> entries;
  bool first = true;
  for (;;) {
    c.skip_ws();
    char p = c.peek();
    Integer sign(1);
    if (p == '-') {
      c.eat('-');
      sign = -1;
    } else if (p == '+') {
      c.eat('+');
    } else if (!first) {
      break;
    }
    Integer mult(1);
    if (c.at_digit()) mult = c.integer();
    int v = c.var_index();
    entries.emplace_back(v, sign * mult);
    first = false;
  }
  if (entries.empty()) c.fail("expected linear form");
  return LinearForm(entries);
}

FractionTerm<Rational> parse_term(Cursor& c, int sign, int& max_index) {
  FractionTerm<Rational> t;
  Integer num = c.integer();
  Integer den(1);
  {
    // a '/' continues the rational only when a digit follows; otherwise it
    // introduces the denominator form list and is re-read below
    size_t save = c.pos();
    if (c.eat('/')) {
      if (c.at_digit())
        den = c.integer();
      else
        c.seek(save);
    }
  }
  if (den == 0) c.fail("zero denominator");
  t.coeff = make_rational(sign * num, den);
  t.coeff.canonicalize();
  while (c.eat_times()) {
    int v = c.var_index();
    t.numer[v] += 1;
    max_index = std::max(max_index, v);
  }
  c.skip_ws();
  if (c.peek() == '[' || c.peek() == '(' || c.peek() == '/') {
    c.eat('/');  // optional when the bracket list follows directly
    c.skip_ws();
    if (c.peek() != '[' && c.peek() != '(')
      c.fail("expected '[' or '(' after '/'");
    while (c.peek() == '[' || c.peek() == '(') {
      char open = c.peek();
      c.eat(open);
      char close = (open == '[') ? ']' : ')';
      for (;;) {
        LinearForm f = parse_form(c);
        max_index = std::max(max_index, f.max_index());
        t.denom.push_back(std::move(f));
        if (c.eat_times()) continue;
        break;
      }
      if (!c.eat(close)) c.fail(std::string("expected '") + close + "'");
    }
  }
  return t;
}

}  // namespace

RatMould parse_mould(const std::string& text, int arity) {
  Cursor c(text);
  if (c.done()) throw ParseError("empty mould text");
  std::vector<FractionTerm<Rational>> terms;
  int max_index = 0;
  int sign = c.eat('-') ? -1 : 1;
  for (;;) {
    terms.push_back(parse_term(c, sign, max_index));
    if (c.done()) break;
    if (c.eat('+'))
      sign = 1;
    else if (c.eat('-'))
      sign = -1;
    else
      c.fail("expected '+' or '-'");
  }
  int n = (arity < 0) ? max_index : arity;
  return RatMould(n, std::move(terms));
}

namespace {

template <class K>
std::string format_fqsym_impl(const FQSymElt<K>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.coeffs()) {
    bool neg = coeff_negative(c);
    K shown = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (!is_one(shown)) out += coeff_str(shown) + " ";
    out += "f_" + perm_str(w);
    first = false;
  }
  return out;
}

}  // namespace

std::string format_fqsym(const FQSymElt<Rational>& e) { return format_fqsym_impl(e); }
std::string format_fqsym(const FQSymElt<QRatCoeff>& e) { return format_fqsym_impl(e); }

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  std::string num = r.get_num().get_str();
  bool neg = false;
  if (!num.empty() && num[0] == '-') {
    neg = true;
    num = num.substr(1);
  }
  return (neg ? std::string("-") : std::string()) + "\\frac{" + num + "}{" +
         r.get_den().get_str() + "}";
}

namespace {

std::string latex_form(const LinearForm& f) {
  std::string body;
  bool first = true;
  for (const auto& [v, c] : f.entries()) {
    Integer a = c;
    if (a < 0) {
      body += "-";
      a = -a;
    } else if (!first) {
      body += "+";
    }
    if (a != 1) body += a.get_str();
    body += "u_{" + std::to_string(v) + "}";
    first = false;
  }
  return f.size() == 1 ? body : "(" + body + ")";
}

}  // namespace

std::string latex_mould(const RatMould& m) {
  if (m.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : m.terms()) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string numer;
    if (c != 1 || t.numer.empty()) numer += latex_rational(c);
    for (const auto& [v, e] : t.numer) {
      if (!numer.empty()) numer += " ";
      numer += "u_{" + std::to_string(v) + "}";
      if (e > 1) numer += "^{" + std::to_string(e) + "}";
    }
    if (t.denom.empty()) {
      out += numer;
    } else {
      std::string den;
      for (const auto& f : t.denom) den += latex_form(f);
      out += "\\frac{" + numer + "}{" + den + "}";
    }
    first = false;
  }
  return out;
}

namespace {

template <class K>
std::string latex_fqsym_impl(const FQSymElt<K>& e,
                             std::string (*coeff_fn)(const K&)) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.coeffs()) {
    bool neg = coeff_negative(c);
    K shown = neg ? -c : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (!is_one(shown)) out += coeff_fn(shown) + "\\,";
    std::string word;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i && w.size() > 9) word += ",";
      word += std::to_string(w[i]);
    }
    out += "f_{" + word + "}";
    first = false;
  }
  return out;
}

std::string latex_q(const QRatCoeff& c) {
  std::string s = c.str();
  return composite_str(s) ? "\\left(" + s + "\\right)" : s;
}

}  // namespace

std::string latex_mould(const QMould& m) {
  if (m.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : m.terms()) {
    if (!first) out += " + ";
    std::string numer = latex_q(t.coeff);
    for (const auto& [v, e] : t.numer) {
      numer += " u_{" + std::to_string(v) + "}";
      if (e > 1) numer += "^{" + std::to_string(e) + "}";
    }
    if (t.denom.empty()) {
      out += numer;
    } else {
      std::string den;
      for (const auto& f : t.denom) den += latex_form(f);
      out += "\\frac{" + numer + "}{" + den + "}";
    }
    first = false;
  }
  return out;
}

std::string latex_fqsym(const FQSymElt<Rational>& e) {
  return latex_fqsym_impl<Rational>(e, &latex_rational);
}

std::string latex_fqsym(const FQSymElt<QRatCoeff>& e) {
  return latex_fqsym_impl<QRatCoeff>(e, &latex_q);
}

std::string latex_composition(const Composition& I, const std::string& letter) {
  std::string out = letter + "^{(";
  for (size_t i = 0; i < I.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(I[i]);
  }
  out += ")}";
  return out;
}

}  // namespace moulds
