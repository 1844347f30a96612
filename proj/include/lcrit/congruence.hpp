#pragma once

// Exact verification of the congruence tables: endoscopic subtraction,
// the integer combination, divisibility by q and the printed factorisation.

#include <lcrit/builtin_tables.hpp>
#include <lcrit/hecke_data.hpp>
#include <lcrit/rational_id.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace lcrit {

/// trace minus the endoscopic contributions.
inline Integer extract_eigenvalue(const Integer& trace, const std::vector<Integer>& endoscopic) {
  Integer r = trace;
  for (const auto& e : endoscopic) r -= e;
  return r;
}

using ResolvedColumns = std::map<std::string, std::map<std::uint32_t, Integer>>;

struct CongruenceMismatch {
  int example = 0;
  std::uint32_t p = 0;
  std::string what;
  std::string expected;
  std::string got;

  std::string str() const {
    return "example " + std::to_string(example) + ", p = " + std::to_string(p) + ", " + what + ": expected " +
           expected + ", got " + got;
  }
};

inline Integer evaluate_weight(const std::vector<Monomial>& w, std::uint32_t p) {
  Integer s = 0;
  for (const auto& m : w) s += Integer(m.coeff) * ipow(Integer(p), m.exponent);
  return s;
}

inline const Integer& lookup(const ResolvedColumns& cols, const std::string& name, std::uint32_t p) {
  auto c = cols.find(name);
  if (c == cols.end()) throw DomainError("unknown column '" + name + "'");
  auto v = c->second.find(p);
  if (v == c->second.end()) throw DomainError("column '" + name + "' has no entry for p = " + std::to_string(p));
  return v->second;
}

inline Integer evaluate_terms(const std::vector<Term>& terms, std::uint32_t p, const ResolvedColumns& cols) {
  Integer s = 0;
  for (const auto& t : terms) s += evaluate_weight(t.weight, p) * lookup(cols, t.column, p);
  return s;
}

/// Columns after generation and derivation. Values computed here that are
/// also printed are compared and disagreements appended to `mismatches`.
inline ResolvedColumns resolve_columns(const CongruenceDataset& d, std::vector<CongruenceMismatch>& mismatches) {
  ResolvedColumns cols;
  for (const auto& [name, col] : d.printed) cols[name] = col.values;
  auto check = [&](const std::string& name, std::uint32_t p, const Integer& got) {
    auto it = d.printed.find(name);
    if (it == d.printed.end()) return;
    auto v = it->second.values.find(p);
    if (v != it->second.values.end() && v->second != got)
      mismatches.push_back({d.id, p, name, v->second.str(), got.str()});
  };
  std::uint32_t pmax = d.primes.empty() ? 2 : *std::max_element(d.primes.begin(), d.primes.end());
  for (const auto& [name, weight] : d.generated) {
    auto form = elliptic_coefficients(weight, pmax);
    for (auto p : d.primes) {
      check(name, p, form.a[p]);
      cols[name][p] = form.a[p];
    }
  }
  for (const auto& step : d.steps) {
    for (auto p : d.primes) {
      std::vector<Integer> parts;
      for (const auto& t : step.endoscopic) parts.push_back(evaluate_weight(t.weight, p) * lookup(cols, t.column, p));
      Integer v = extract_eigenvalue(lookup(cols, step.trace, p), parts);
      check(step.target, p, v);
      cols[step.target][p] = v;
    }
  }
  return cols;
}

struct CongruenceRow {
  std::uint32_t p = 0;
  Integer value;
  Factorization factorization;
  bool divisible = false;        // q | value
  bool extra_divisible = true;   // extra_divisor | value
  std::string printed;           // factorisation as tabulated
  bool matches_printed = false;
};

inline CongruenceRow congruence_row(const CombinationRecipe& recipe, std::uint32_t p, const ResolvedColumns& cols,
                                    const Integer& extra_divisor = 1) {
  CongruenceRow row;
  row.p = p;
  row.value = evaluate_terms(recipe.terms, p, cols);
  row.factorization = factorize(row.value);
  row.divisible = row.value % recipe.q == 0;
  row.extra_divisible = row.value % extra_divisor == 0;
  return row;
}

/// Row for one prime of a built-in dataset; throws DomainError for a prime
/// the dataset does not cover.
inline CongruenceRow congruence_row(const CombinationRecipe& recipe, std::uint32_t p, const CongruenceDataset& d) {
  if (std::find(d.primes.begin(), d.primes.end(), p) == d.primes.end())
    throw DomainError("example " + std::to_string(d.id) + " has no data for p = " + std::to_string(p));
  std::vector<CongruenceMismatch> ignored;
  return congruence_row(recipe, p, resolve_columns(d, ignored), d.extra_divisor);
}

struct CongruenceReport {
  CongruenceDataset dataset;
  ResolvedColumns columns;
  std::vector<CongruenceRow> rows;
  std::vector<CongruenceMismatch> mismatches;

  bool pass() const {
    if (!mismatches.empty()) return false;
    for (const auto& r : rows)
      if (!r.divisible || !r.matches_printed || !r.extra_divisible) return false;
    return true;
  }
};

inline CongruenceReport verify_dataset(const CongruenceDataset& d) {
  CongruenceReport rep;
  rep.dataset = d;
  rep.columns = resolve_columns(d, rep.mismatches);
  for (auto p : d.primes) {
    auto row = congruence_row(d.recipe, p, rep.columns, d.extra_divisor);
    auto it = d.printed_factorization.find(p);
    if (it != d.printed_factorization.end()) {
      row.printed = it->second;
      row.matches_printed = row.factorization.str() == row.printed;
      if (!row.matches_printed) rep.mismatches.push_back({d.id, p, "factorisation", row.printed, row.factorization.str()});
    }
    if (!row.divisible)
      rep.mismatches.push_back({d.id, p, "divisibility by " + d.recipe.q.str(), "0 mod q",
                                Integer(row.value % d.recipe.q).str() + " mod q"});
    if (!row.extra_divisible)
      rep.mismatches.push_back({d.id, p, "divisibility by " + d.extra_divisor.str(), "0", "nonzero remainder"});
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline CongruenceReport verify_example(int id) { return verify_dataset(builtin_table(id)); }

/// Where a congruence prime is expected to appear in a ratio of L-values.
struct PredictedPrime {
  std::string case_id;
  Rational t1, t2;  // ratio pi^m L(t1) / L(t2), analytic points
  Integer prime;
  Side side = Side::numerator;
  std::string reason;
};

inline const std::vector<PredictedPrime>& prediction_registry() {
  static const std::vector<PredictedPrime> reg{
      {"case1", Rational(3), Rational(5), Integer(839), Side::numerator,
       "Klingen-Eisenstein congruence (Kurokawa-Mizumoto type) for l = 16, (j, k) = (4, 12); L(5) is at the "
       "motivic point j + 2k - 3 and carries 839 in its denominator"},
      {"case1", Rational(3), Rational(5), Integer(17), Side::numerator, "SO(9) Eisenstein congruence mod 17 (example 5)"},
      {"case1", Rational(1), Rational(3), Integer(71), Side::numerator, "SO(7) endoscopic congruence mod 71 (example 3)"},
      {"case1", Rational(1), Rational(3), Integer(17), Side::denominator, "SO(9) Eisenstein congruence mod 17 (example 5)"},
      {"case2", Rational(1), Rational(3), Integer(61), Side::denominator,
       "Harder-type congruence for l = 18, (j, k) = (4, 15); q in the numerator of L(3)"},
      {"case3", Rational(1), Rational(3), Integer(61), Side::numerator, "SO(7) endoscopic congruence mod 61 (example 4)"},
      {"deg16", Rational(1), Rational(2), Integer(37), Side::numerator, "SO(9) endoscopic congruence mod 37 (example 6)"},
  };
  return reg;
}

inline std::vector<PredictedPrime> predictions_for(const std::string& case_id, const Rational& t1, const Rational& t2) {
  std::vector<PredictedPrime> out;
  for (const auto& p : prediction_registry())
    if (p.case_id == case_id && p.t1 == t1 && p.t2 == t2) out.push_back(p);
  return out;
}

}  // namespace lcrit
