// mouldtool: command line front end for the mould calculus library.
//
// Subcommands:
//   compose   operadic composition of two moulds, with f_sigma decomposition
//   verify    structural test suites (tamari, alternal, gamma, hooks, ncsf, all)
//   zoo       named moulds: print, decompose, alternality / symmetrality checks
//   ncsf      basis-change tables and bracket expansions
//   table     integer / coefficient tables (a006013, po, s-psi)
//
// Output is JSON by default (sorted keys, stable across runs); --format latex
// and --format text are available where they make sense.  Exit codes: 0 on
// success, 1 when a verification fails, 2 on usage or input errors.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moulds/errors.hpp"
#include "moulds/fqsym.hpp"
#include "moulds/freeseries.hpp"
#include "moulds/mould.hpp"
#include "moulds/ncsf.hpp"
#include "moulds/nct.hpp"
#include "moulds/permutation.hpp"
#include "moulds/power_series.hpp"
#include "moulds/qpoly.hpp"
#include "moulds/rational.hpp"
#include "moulds/textio.hpp"
#include "moulds/tree.hpp"
#include "moulds/zoo.hpp"

using json = nlohmann::json;
using namespace moulds;

namespace {

struct GlobalOpts {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  bool timing = false;
  std::vector<std::string> raw_params;
};

std::map<std::string, Rational> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, Rational> out;
  for (const auto& entry : raw) {
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
      throw ParamError("--param expects NAME=VALUE, got '" + entry + "'");
    out[entry.substr(0, eq)] = parse_rational(entry.substr(eq + 1));
  }
  return out;
}

// Names whose mould genuinely depends on the formal parameter q (alpha for ty).
bool is_q_family(const std::string& name) {
  return name == "ty" || name == "qliny" || name == "po" || name == "qsolomon";
}

QMould named_qmould(const std::string& name, int n,
                    const std::map<std::string, Rational>& params) {
  if (n < 1) throw ParamError("mould arity must be positive");
  if (name == "uniform") return lift_to_q(uniform_mould(n));
  if (name == "timeordered") return lift_to_q(timeordered_mould(n));
  if (name == "liny") return lift_to_q(liny_mould(n));
  if (name == "cm") return lift_to_q(cm_mould(n));
  if (name == "solomon") return lift_to_q(solomon_fsym(n).to_mould());
  if (name == "dynkin") return lift_to_q(dynkin_fsym(n).to_mould());
  if (name == "ty") return ty_mould(n);
  if (name == "qliny") return qliny_mould(n);
  if (name == "po") return po_mould(n);
  if (name == "qsolomon") return qsolomon_fsym(n).to_mould();
  if (name == "ypq") {
    auto it = params.find("p");
    if (it == params.end())
      throw ParamError("mould 'ypq' needs --param p=P with 1 <= P <= n");
    if (it->second.get_den() != 1) throw ParamError("--param p must be an integer");
    long p = it->second.get_num().get_si();
    if (p < 1 || p > n) throw ParamError("--param p must lie in 1..n");
    return lift_to_q(ypq_mould(static_cast<int>(p), n - static_cast<int>(p)));
  }
  throw ParamError("unknown mould name '" + name + "'");
}

Rational q_value_for(const std::string& name,
                     const std::map<std::string, Rational>& params) {
  // ty is parametrised by alpha in the literature; accept both spellings.
  auto it = params.find("q");
  if (it == params.end() && name == "ty") it = params.find("alpha");
  if (it == params.end())
    throw ParamError("mould '" + name + "' needs --param q=VALUE (or alpha=VALUE for ty)");
  return it->second;
}

RatMould named_ratmould(const std::string& name, int n,
                        const std::map<std::string, Rational>& params) {
  QMould qm = named_qmould(name, n, params);
  if (!is_q_family(name)) return specialize_q(qm, Rational(0));
  return specialize_q(qm, q_value_for(name, params));
}

// Operand grammar for compose: a bare digit string (or comma separated list)
// is a permutation, anything containing '/', '[' or '(' is the raw fraction
// grammar, and everything else is NAME:ARITY against the named catalogue.
RatMould compose_operand(const std::string& expr,
                         const std::map<std::string, Rational>& params) {
  if (expr.empty()) throw ParamError("empty mould expression");
  bool perm_like = true;
  for (char ch : expr)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == ',')) perm_like = false;
  if (perm_like) return perm_mould<Rational>(parse_perm(expr));
  if (expr.find('/') != std::string::npos || expr.find('[') != std::string::npos ||
      expr.find('(') != std::string::npos)
    return parse_mould(expr);
  auto colon = expr.find(':');
  if (colon == std::string::npos)
    throw ParamError("named mould needs an arity, e.g. '" + expr + ":3'");
  int n = 0;
  try {
    n = std::stoi(expr.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParamError("bad arity in mould expression '" + expr + "'");
  }
  return named_ratmould(expr.substr(0, colon), n, params);
}

json fqsym_to_json(const FQSymElt<Rational>& e) {
  json out = json::object();
  for (const auto& [w, c] : e.coeffs()) out[perm_str(w)] = to_string(c);
  return out;
}

json fqsym_to_json(const FQSymElt<QRatCoeff>& e) {
  json out = json::object();
  for (const auto& [w, c] : e.coeffs()) out[perm_str(w)] = c.str();
  return out;
}

json series_to_json(const FreeSeries& s) {
  json out = json::object();
  for (const auto& [w, c] : s.coeffs()) {
    std::string key;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) key += ",";
      key += std::to_string(w[i]);
    }
    if (key.empty()) key = "()";
    out[key] = to_string(c);
  }
  return out;
}

std::string composition_key(const Composition& I) {
  std::string key;
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(I[i]);
  }
  return key.empty() ? "()" : key;
}

void emit_report(const GlobalOpts& g, json& report,
                 std::chrono::steady_clock::time_point t0,
                 const std::string& text_alt, const std::string& latex_alt) {
  if (g.timing) {
    auto dt = std::chrono::steady_clock::now() - t0;
    report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
  } else {
    report["elapsed_ms"] = nullptr;
  }
  if (g.format == "latex" && !latex_alt.empty())
    std::cout << latex_alt << "\n";
  else if (g.format == "text" && !text_alt.empty())
    std::cout << text_alt << "\n";
  else
    std::cout << report.dump(2) << "\n";
}

// ---------------------------------------------------------------- compose --

int cmd_compose(const GlobalOpts& g, const std::string& left, int i,
                const std::string& right) {
  auto t0 = std::chrono::steady_clock::now();
  auto params = parse_params(g.raw_params);
  RatMould f = compose_operand(left, params);
  RatMould h = compose_operand(right, params);
  RatMould comp = compose_at(f, i, h);

  json report;
  report["command"] = "compose";
  report["parameters"] = {{"left", left}, {"i", i}, {"right", right},
                          {"seed", g.seed}};
  json results;
  results["arity"] = comp.arity();
  results["rational"] = format_mould(comp);
  std::string text = format_mould(comp);
  std::string latex = latex_mould(comp);
  try {
    FQSymElt<Rational> dec = decompose_fsym(comp, 20, g.seed);
    results["fsym"] = format_fqsym(dec);
    results["fsym_coeffs"] = fqsym_to_json(dec);
    results["in_span"] = true;
    text += "\n= " + format_fqsym(dec);
    latex += " = " + latex_fqsym(dec);
  } catch (const NotInSpanError&) {
    results["in_span"] = false;
  }
  report["results"] = results;
  emit_report(g, report, t0, text, latex);
  return 0;
}

// ----------------------------------------------------------------- verify --

struct SuiteResult {
  bool pass = true;
  json details = json::object();
};

SuiteResult suite_tamari(int max_n) {
  SuiteResult r;
  json per_n = json::array();
  for (int n = 1; n <= max_n; ++n) {
    int forests = 0, intervals = 0, patterns = 0;
    for (const auto& forest : enumerate_nif(n)) {
      ++forests;
      TamariIntervalReport rep = tamari_interval_of(forest);
      if (rep.is_interval) ++intervals;
      if (rep.min_avoids_312 && rep.max_avoids_132) ++patterns;
    }
    if (intervals != forests || patterns != forests) r.pass = false;
    per_n.push_back({{"n", n},
                     {"forests_checked", forests},
                     {"intervals_ok", intervals},
                     {"pattern_ok", patterns}});
  }
  r.details["per_n"] = per_n;
  return r;
}

SuiteResult suite_alternal(int max_n, std::uint64_t seed) {
  SuiteResult r;
  std::mt19937_64 rng(seed ^ 0x616c74ULL);
  json checks = json::object();

  bool solomon_ok = true, dynkin_ok = true, qsolomon_ok = true;
  for (int n = 1; n <= max_n; ++n) {
    if (!alternality_check(solomon_fsym(n).to_mould(), 20, seed)) solomon_ok = false;
    if (!alternality_check(dynkin_fsym(n).to_mould(), 20, seed)) dynkin_ok = false;
  }
  for (int trial = 0; trial < 3; ++trial) {
    Rational q0 = random_probe_value(rng);
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
      QMould qs = qsolomon_fsym(n).to_mould();
      if (!alternality_check(specialize_q(qs, q0), 20, seed)) qsolomon_ok = false;
    }
  }
  checks["solomon_alternal"] = solomon_ok;
  checks["dynkin_alternal"] = dynkin_ok;
  checks["qsolomon_alternal"] = qsolomon_ok;

  MouldFamily to_family = [](int n) { return timeordered_mould(n); };
  bool sym_ok = true;
  for (int n = 2; n <= max_n; ++n)
    if (!symmetrality_check(to_family, n, 20, seed)) sym_ok = false;
  checks["timeordered_symmetral"] = sym_ok;

  // Negative control: the uniform mould is neither alternal nor symmetral.
  MouldFamily un_family = [](int n) { return uniform_mould(n); };
  bool control_ok = !alternality_check(uniform_mould(2), 20, seed) &&
                    !symmetrality_check(un_family, 2, 20, seed);
  checks["uniform_negative_control"] = control_ok;

  r.pass = solomon_ok && dynkin_ok && qsolomon_ok && sym_ok && control_ok;
  r.details = checks;
  return r;
}

SuiteResult suite_gamma(int max_n, std::uint64_t seed) {
  SuiteResult r;
  json checks = json::object();

  auto expand = [](std::initializer_list<const char*> words, int sign) {
    FQSymElt<Rational> acc(4);
    for (const char* w : words)
      acc.accumulate(parse_perm(w), Rational(sign));
    return acc;
  };
  FQSymElt<Rational> g1432 = expand({"2134", "1234", "1324", "1342"}, -1);
  FQSymElt<Rational> g2143 = expand({"3214", "3124", "3142", "1342", "1324", "1432"}, 1);

  bool goldens = gamma_fsym(FQSymElt<Rational>::basis(parse_perm("1432"))) == g1432 &&
                 gamma_fsym(FQSymElt<Rational>::basis(parse_perm("2143"))) == g2143 &&
                 gamma_fsym(FQSymElt<Rational>::basis({1})) ==
                     FQSymElt<Rational>::basis({1}).scaled(Rational(-1));
  // The same identities at the level of rational fractions.
  bool mould_side =
      equal(gamma(perm_mould<Rational>(parse_perm("1432"))), g1432.to_mould(), 20, seed) &&
      equal(gamma(perm_mould<Rational>(parse_perm("2143"))), g2143.to_mould(), 20, seed);
  checks["goldens"] = goldens && mould_side;

  // gamma has order n+1 on arity n; structural equality of canonical forms.
  bool order_ok = true;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& sigma : all_permutations(n)) {
      RatMould m = perm_mould<Rational>(sigma);
      RatMould it = m;
      for (int k = 0; k <= n; ++k) it = gamma(it);
      if (!(it == m)) order_ok = false;
    }
  checks["order_n_plus_1"] = order_ok;

  r.pass = goldens && mould_side && order_ok;
  r.details = checks;
  return r;
}

SuiteResult suite_hooks(int max_n) {
  SuiteResult r;
  json checks = json::object();

  BinaryTree golden = BinaryTree::parse("((o,o),((o,o),o))");
  bool golden_ok =
      tree_mould(golden) == parse_mould("1 / [u1][u3][u3+u4][u1+u2+u3+u4]") &&
      hook_count(golden) == Integer(3) &&
      sylvester_class(golden).size() == 3;
  checks["golden_tree"] = golden_ok;

  bool sweep_ok = true;
  json per_n = json::array();
  for (int n = 1; n <= max_n; ++n) {
    int trees = 0;
    Integer total = 0;
    for (const auto& t : enumerate_trees(n)) {
      ++trees;
      Integer hooks = hook_count(t);
      total += hooks;
      if (Integer(static_cast<long>(sylvester_class(t).size())) != hooks) sweep_ok = false;
    }
    // Sylvester classes partition the symmetric group.
    if (total != factorial(n)) sweep_ok = false;
    per_n.push_back({{"n", n}, {"trees", trees}});
  }
  checks["class_sizes_match_hooks"] = sweep_ok;
  checks["per_n"] = per_n;

  r.pass = golden_ok && sweep_ok;
  r.details = checks;
  return r;
}

SuiteResult suite_ncsf(int degree) {
  SuiteResult r;
  json checks = json::object();
  int N = std::max(degree, 5);

  auto g = [&](int k) { return FreeSeries::generator(N, k); };
  auto br = [](const FreeSeries& a, const FreeSeries& b) { return bracket(a, b); };

  std::vector<FreeSeries> Z = zassenhaus(N);
  FreeSeries z3 = g(3) + br(g(2), g(1)).scaled(Rational(1, 2));
  FreeSeries z4 = g(4) + br(g(3), g(1)).scaled(Rational(1, 3)) +
                  br(br(g(2), g(1)), g(1)).scaled(Rational(1, 6));
  FreeSeries z5 = g(5) + br(g(4), g(1)).scaled(Rational(1, 4)) +
                  br(g(3), g(2)).scaled(Rational(1, 3)) +
                  br(br(g(3), g(1)), g(1)).scaled(Rational(1, 12)) +
                  br(g(2), br(g(2), g(1))).scaled(Rational(-7, 24)) +
                  br(br(br(g(2), g(1)), g(1)), g(1)).scaled(Rational(1, 24));
  bool zass_ok = Z.size() >= 5 && Z[2] == z3 && Z[3] == z4 && Z[4] == z5;
  checks["zassenhaus_goldens"] = zass_ok;

  bool lie_ok = true;
  for (int k = 2; k <= N && k <= static_cast<int>(Z.size()); ++k)
    if (!is_lie(Z[k - 1])) lie_ok = false;
  checks["zassenhaus_is_lie"] = lie_ok;

  // The two basis changes between Psi and Phi are mutually inverse.
  bool inverse_ok = true;
  for (int n = 1; n <= degree; ++n) {
    std::map<Composition, Rational> round;
    for (const auto& [K, c] : psi_in_phi(n))
      for (const auto& [I, d] : expand_word(phi_in_psi, K)) {
        round[I] += c * d;
        if (round[I] == 0) round.erase(I);
      }
    if (round.size() != 1 || round.begin()->first != Composition{n} ||
        round.begin()->second != 1)
      inverse_ok = false;
    round.clear();
    for (const auto& [K, c] : phi_in_psi(n))
      for (const auto& [I, d] : expand_word(psi_in_phi, K)) {
        round[I] += c * d;
        if (round[I] == 0) round.erase(I);
      }
    if (round.size() != 1 || round.begin()->first != Composition{n} ||
        round.begin()->second != 1)
      inverse_ok = false;
  }
  checks["phi_psi_inverse"] = inverse_ok;

  // sigma(t) * lambda(-t) = 1, coefficient by coefficient.
  bool duality_ok = true;
  for (int n = 1; n <= degree; ++n) {
    std::map<Composition, Rational> conv;
    // sigma's S_n expanded in Lambda, times lambda(-t)'s (-1)^k Lambda_k.
    for (const auto& [I, c] : s_in_lambda(n)) {
      conv[I] += c;
      if (conv[I] == 0) conv.erase(I);
    }
    for (int k = 1; k < n; ++k) {
      Rational sign = (k % 2) ? Rational(-1) : Rational(1);
      for (const auto& [I, c] : s_in_lambda(n - k)) {
        Composition J = I;
        J.push_back(k);
        conv[J] += c * sign;
        if (conv[J] == 0) conv.erase(J);
      }
    }
    Rational sign = (n % 2) ? Rational(-1) : Rational(1);
    Composition Jn{n};
    conv[Jn] += sign;
    if (conv[Jn] == 0) conv.erase(Jn);
    if (!conv.empty()) duality_ok = false;
  }
  checks["s_lambda_duality"] = duality_ok;

  r.pass = zass_ok && lie_ok && inverse_ok && duality_ok;
  r.details = checks;
  return r;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, int max_n, int degree) {
  auto t0 = std::chrono::steady_clock::now();
  json report;
  report["command"] = "verify";
  report["parameters"] = {{"suite", suite}, {"max_n", max_n},
                          {"degree", degree}, {"seed", g.seed}};
  json results = json::object();
  bool pass = true;
  std::string text;

  auto run = [&](const std::string& name, SuiteResult sr) {
    sr.details["pass"] = sr.pass;
    results[name] = sr.details;
    pass = pass && sr.pass;
    text += name + ": " + (sr.pass ? "PASS" : "FAIL") + "\n";
  };

  if (suite == "tamari" || suite == "all") run("tamari", suite_tamari(max_n));
  if (suite == "alternal" || suite == "all") run("alternal", suite_alternal(max_n, g.seed));
  if (suite == "gamma" || suite == "all") run("gamma", suite_gamma(std::min(max_n, 5), g.seed));
  if (suite == "hooks" || suite == "all") run("hooks", suite_hooks(std::max(max_n, 6)));
  if (suite == "ncsf" || suite == "all") run("ncsf", suite_ncsf(degree));
  if (results.empty()) throw ParamError("unknown verify suite '" + suite + "'");

  report["pass"] = pass;
  report["results"] = results;
  if (!text.empty()) text.pop_back();
  emit_report(g, report, t0, text, "");
  return pass ? 0 : 1;
}

// -------------------------------------------------------------------- zoo --

int cmd_zoo(const GlobalOpts& g, const std::string& name, int n,
            const std::string& check) {
  auto t0 = std::chrono::steady_clock::now();
  auto params = parse_params(g.raw_params);
  json report;
  report["command"] = "zoo";
  report["parameters"] = {{"mould", name}, {"n", n}, {"check", check},
                          {"seed", g.seed}};
  json results = json::object();
  int rc = 0;
  std::string text, latex;

  bool symbolic = is_q_family(name) &&
                  params.find("q") == params.end() &&
                  (name != "ty" || params.find("alpha") == params.end());

  if (symbolic) {
    QMould m = named_qmould(name, n, params);
    results["mould"] = format_mould(m);
    text = format_mould(m);
    latex = latex_mould(m);
    if (check == "alternal") {
      bool ok = alternality_check(m, 20, g.seed);
      results["alternal"] = ok;
      text += std::string("\nalternal: ") + (ok ? "yes" : "no");
    } else if (check == "decompose") {
      try {
        FQSymElt<QRatCoeff> dec = decompose_fsym(m, 20, g.seed);
        results["fsym"] = format_fqsym(dec);
        results["fsym_coeffs"] = fqsym_to_json(dec);
        results["in_span"] = true;
        text += "\n= " + format_fqsym(dec);
        latex += " = " + latex_fqsym(dec);
      } catch (const NotInSpanError&) {
        results["in_span"] = false;
        rc = 1;
      }
    } else if (check == "symmetral") {
      MouldFamilyT<QRatCoeff> fam = [&](int k) { return named_qmould(name, k, params); };
      bool ok = symmetrality_check(fam, n, 20, g.seed);
      results["symmetral"] = ok;
      text += std::string("\nsymmetral: ") + (ok ? "yes" : "no");
    } else if (check != "none") {
      throw ParamError("unknown zoo check '" + check + "'");
    }
  } else {
    RatMould m = named_ratmould(name, n, params);
    results["mould"] = format_mould(m);
    text = format_mould(m);
    latex = latex_mould(m);
    if (check == "alternal") {
      bool ok = alternality_check(m, 20, g.seed);
      results["alternal"] = ok;
      text += std::string("\nalternal: ") + (ok ? "yes" : "no");
    } else if (check == "decompose") {
      try {
        FQSymElt<Rational> dec = decompose_fsym(m, 20, g.seed);
        results["fsym"] = format_fqsym(dec);
        results["fsym_coeffs"] = fqsym_to_json(dec);
        results["in_span"] = true;
        text += "\n= " + format_fqsym(dec);
        latex += " = " + latex_fqsym(dec);
      } catch (const NotInSpanError&) {
        results["in_span"] = false;
        rc = 1;
      }
    } else if (check == "symmetral") {
      MouldFamily fam = [&](int k) { return named_ratmould(name, k, params); };
      bool ok = symmetrality_check(fam, n, 20, g.seed);
      results["symmetral"] = ok;
      text += std::string("\nsymmetral: ") + (ok ? "yes" : "no");
    } else if (check != "none") {
      throw ParamError("unknown zoo check '" + check + "'");
    }
  }

  report["results"] = results;
  emit_report(g, report, t0, text, latex);
  return rc;
}

// ------------------------------------------------------------------- ncsf --

int cmd_ncsf(const GlobalOpts& g, const std::string& table, int degree) {
  auto t0 = std::chrono::steady_clock::now();
  json report;
  report["command"] = "ncsf";
  report["parameters"] = {{"table", table}, {"degree", degree}};
  json results = json::object();
  std::string text, latex;

  auto coeff_table = [&](std::map<Composition, Rational> (*fn)(int),
                         const std::string& sym_from, const std::string& sym_to) {
    json per_n = json::object();
    for (int n = 1; n <= degree; ++n) {
      json row = json::object();
      std::ostringstream tl, ll;
      tl << sym_from << "_" << n << " =";
      ll << sym_from << "_{" << n << "} &=";
      bool first = true;
      for (const auto& [I, c] : fn(n)) {
        row[composition_key(I)] = to_string(c);
        tl << (first ? " " : " + ") << to_string(c) << "*" << sym_to << "^(" << composition_key(I) << ")";
        ll << (first ? " " : " + ") << latex_rational(c) << "\\," << latex_composition(I, sym_to);
        first = false;
      }
      per_n[std::to_string(n)] = row;
      text += tl.str() + "\n";
      latex += ll.str() + " \\\\\n";
    }
    results["rows"] = per_n;
  };

  if (table == "s-lambda") {
    coeff_table(&s_in_lambda, "S", "\\Lambda");
  } else if (table == "s-psi") {
    coeff_table(&s_in_psi, "S", "\\Psi");
  } else if (table == "magnus") {
    coeff_table(&psi_in_phi, "\\Psi", "\\Phi");
  } else if (table == "bch") {
    coeff_table(&phi_in_psi, "\\Phi", "\\Psi");
  } else if (table == "zassenhaus") {
    std::vector<FreeSeries> Z = zassenhaus(degree);
    json rows = json::object();
    for (int k = 1; k <= degree; ++k) {
      rows[std::to_string(k)] = series_to_json(Z[k - 1]);
      text += "Z_" + std::to_string(k) + ": see json\n";
    }
    results["rows"] = rows;
  } else if (table == "phi-q") {
    json rows = json::object();
    for (int n = 1; n <= std::min(degree, 6); ++n) {
      json row = json::object();
      for (const auto& [sigma, c] : phi_q(n)) row[perm_str(sigma)] = c.str();
      rows[std::to_string(n)] = row;
      text += "phi_q(" + std::to_string(n) + "): see json\n";
    }
    results["rows"] = rows;
  } else {
    throw ParamError("unknown ncsf table '" + table + "'");
  }

  report["results"] = results;
  if (!text.empty()) text.pop_back();
  emit_report(g, report, t0, text, latex);
  return 0;
}

// ------------------------------------------------------------------ table --

int cmd_table(const GlobalOpts& g, const std::string& kind, int n, int degree) {
  auto t0 = std::chrono::steady_clock::now();
  json report;
  report["command"] = "table";
  report["parameters"] = {{"kind", kind}, {"n", n}, {"degree", degree}};
  json results = json::object();
  std::string text;

  if (kind == "a006013") {
    if (n < 1 || n > 14) throw ParamError("--n must lie in 1..14 for a006013");
    PowerSeries f(n, {0, -1, 2, -1});
    PowerSeries inv = series_compose_inverse(f, n);
    json vals = json::array();
    for (int k = 1; k <= n; ++k) {
      Rational c = inv.coeff(k);
      Rational a = c < 0 ? Rational(-c) : c;
      vals.push_back(to_string(a));
      text += to_string(a) + (k < n ? ", " : "");
    }
    results["values"] = vals;
  } else if (kind == "po") {
    if (n < 1 || n > 6) throw ParamError("--n must lie in 1..6 for po");
    auto params = parse_params(g.raw_params);
    QMould m = po_mould(n);
    if (params.count("q")) {
      RatMould at_q = specialize_q(m, params.at("q"));
      FQSymElt<Rational> dec = decompose_fsym(at_q, 20, g.seed);
      results["coeffs"] = fqsym_to_json(dec);
      text = format_fqsym(dec);
    } else {
      FQSymElt<QRatCoeff> dec = decompose_fsym(m, 20, g.seed);
      results["coeffs"] = fqsym_to_json(dec);
      text = format_fqsym(dec);
    }
  } else if (kind == "s-psi") {
    json rows = json::object();
    for (int k = 1; k <= degree; ++k) {
      json row = json::object();
      for (const auto& [I, c] : s_in_psi(k)) row[composition_key(I)] = to_string(c);
      rows[std::to_string(k)] = row;
    }
    results["rows"] = rows;
    text = "see json";
  } else {
    throw ParamError("unknown table kind '" + kind + "'");
  }

  report["results"] = results;
  emit_report(g, report, t0, text, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mould calculus: operadic composition, decomposition and checks"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "latex", "text"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized equality testing")
      ->capture_default_str();
  app.add_flag("--timing", g.timing, "include wall-clock elapsed_ms in reports");
  app.add_option("--param", g.raw_params, "mould parameter NAME=VALUE (repeatable)");

  auto* compose = app.add_subcommand("compose", "operadic composition f o_i g");
  compose->fallthrough();
  std::string left, right;
  int pos = 1;
  compose->add_option("--left", left, "left operand (permutation, fraction or name:N)")
      ->required();
  compose->add_option("--i", pos, "composition slot, 1-based")->required();
  compose->add_option("--right", right, "right operand")->required();

  auto* verify = app.add_subcommand("verify", "run structural verification suites");
  verify->fallthrough();
  std::string suite;
  int max_n = 4, degree = 5;
  verify->add_option("suite", suite, "tamari | alternal | gamma | hooks | ncsf | all")
      ->required();
  verify->add_option("--max-n", max_n, "largest arity to sweep")->capture_default_str();
  verify->add_option("--degree", degree, "series truncation degree")->capture_default_str();

  auto* zoo = app.add_subcommand("zoo", "named moulds and their checks");
  zoo->fallthrough();
  std::string zname, zcheck = "none";
  int zn = 3;
  zoo->add_option("--mould", zname, "uniform | timeordered | ypq | ty | liny | qliny | cm | solomon | qsolomon | dynkin | po")
      ->required();
  zoo->add_option("--n", zn, "arity")->capture_default_str();
  zoo->add_option("--check", zcheck, "none | alternal | symmetral | decompose")
      ->capture_default_str();

  auto* ncsf = app.add_subcommand("ncsf", "basis-change tables");
  ncsf->fallthrough();
  std::string table;
  int ndeg = 5;
  ncsf->add_option("--table", table, "s-lambda | s-psi | magnus | bch | zassenhaus | phi-q")
      ->required();
  ncsf->add_option("--degree", ndeg, "truncation degree")->capture_default_str();

  auto* tbl = app.add_subcommand("table", "coefficient tables");
  tbl->fallthrough();
  std::string kind;
  int tn = 5, tdeg = 5;
  tbl->add_option("--kind", kind, "a006013 | po | s-psi")->required();
  tbl->add_option("--n", tn, "table size / arity")->capture_default_str();
  tbl->add_option("--degree", tdeg, "truncation degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(compose)) return cmd_compose(g, left, pos, right);
    if (app.got_subcommand(verify)) return cmd_verify(g, suite, max_n, degree);
    if (app.got_subcommand(zoo)) return cmd_zoo(g, zname, zn, zcheck);
    if (app.got_subcommand(ncsf)) return cmd_ncsf(g, table, ndeg);
    if (app.got_subcommand(tbl)) return cmd_table(g, kind, tn, tdeg);
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MouldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
