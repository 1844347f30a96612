#pragma once

// Case registry and the ratio pipeline:
// coefficients -> AFE matrix -> weights -> L-values -> ratio -> identification.

#include <lcrit/afe.hpp>
#include <lcrit/congruence.hpp>
#include <lcrit/euler.hpp>
#include <lcrit/gamma_fe.hpp>
#include <lcrit/hecke_data.hpp>
#include <lcrit/rational_id.hpp>
#include <lcrit/weights.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcrit {

struct SiegelWeight {
  int j = 0;
  int k = 0;
};

struct CaseSpec {
  std::string id;
  std::string title;
  int l = 0;                          // elliptic weight, 0 if absent
  std::vector<SiegelWeight> siegel;   // one or two genus-2 factors
  std::vector<std::pair<Rational, Rational>> ratios;  // (t1, t2) studied, analytic
  std::vector<Rational> betas{};      // preferred test-function grid; empty: configuration default

  std::size_t files_needed() const { return siegel.size(); }
};

inline const std::vector<CaseSpec>& case_registry() {
  static const std::vector<CaseSpec> reg{
      {"case1", "GL2 x GSp2, l = 16, (j, k) = (4, 12)", 16, {{4, 12}}, {{Rational(3), Rational(5)}, {Rational(1), Rational(3)}}},
      {"case2", "GL2 x GSp2, l = 18, (j, k) = (4, 15)", 18, {{4, 15}}, {{Rational(1), Rational(3)}}},
      {"case3", "GL2 x GSp2, l = 16, (j, k) = (6, 10)", 16, {{6, 10}}, {{Rational(1), Rational(3)}}},
      {"deg16", "GSp2 x GSp2, (j, k) = (8, 8) and (14, 7)", 0, {{8, 8}, {14, 7}}, {{Rational(1), Rational(2)}}},
      {"delta", "weight 12 cusp form Delta (degree 2)", 12, {}, {{Rational(1, 2), Rational(5, 2)}}, {Rational(0), Rational(1, 4), Rational(1, 2)}},
  };
  return reg;
}

inline const CaseSpec& find_case(const std::string& id) {
  for (const auto& c : case_registry())
    if (c.id == id) return c;
  std::string known;
  for (const auto& c : case_registry()) known += (known.empty() ? "" : ", ") + c.id;
  throw DomainError("unknown case '" + id + "' (available: " + known + ")");
}

inline HodgeData case_hodge(const CaseSpec& c) {
  if (c.siegel.size() == 2) return tensor_hodge_points(spinor_hodge(c.siegel[0].j, c.siegel[0].k),
                                                       spinor_hodge(c.siegel[1].j, c.siegel[1].k));
  if (c.siegel.size() == 1) return hodge_points(c.l, c.siegel[0].j, c.siegel[0].k);
  return elliptic_hodge(c.l);
}

inline FunctionalEquationData case_functional_equation(const CaseSpec& c) {
  return functional_equation(case_hodge(c));
}

/// Dirichlet coefficients up to n_max. Local factors exist for primes
/// covered by every input table; where lambda(p^2) is missing only b_p is
/// trusted.
inline DirichletSeries case_series(const CaseSpec& c, const std::vector<SiegelEigenvalueTable>& tables,
                                   std::uint32_t n_max) {
  if (tables.size() != c.files_needed())
    throw DomainError("case " + c.id + " needs " + std::to_string(c.files_needed()) + " eigenvalue file(s), got " +
                      std::to_string(tables.size()));
  for (std::size_t i = 0; i < tables.size(); ++i)
    if (tables[i].j != c.siegel[i].j || tables[i].k != c.siegel[i].k)
      throw DomainError("eigenvalue file " + tables[i].source + " is for (j, k) = (" + std::to_string(tables[i].j) +
                        ", " + std::to_string(tables[i].k) + "), case " + c.id + " needs (" +
                        std::to_string(c.siegel[i].j) + ", " + std::to_string(c.siegel[i].k) + ")");
  auto fe = case_functional_equation(c);
  std::uint32_t pmax = n_max;
  for (const auto& t : tables) pmax = std::min(pmax, t.max_prime());
  std::optional<EllipticEigenform> form;
  if (c.l > 0) form = elliptic_coefficients(c.l, c.siegel.empty() ? n_max : std::max<std::uint32_t>(pmax, 2));
  std::map<std::uint32_t, LocalFactor> factors;
  std::map<std::uint32_t, unsigned> caps;
  Sieve sieve(std::max<std::uint32_t>(pmax, 2));
  for (auto p : sieve.primes()) {
    if (p > pmax) break;
    std::optional<LocalFactor> f;
    if (form) f = hecke_local_factor(form->a[p], p, c.l);
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const auto& e = tables[i].at(p);
      if (!e.lambda_p2) caps[p] = 1;
      auto s = spinor_local_factor(e.lambda_p, e.lambda_p2.value_or(Integer(0)), p, c.siegel[i].j, c.siegel[i].k);
      f = f ? tensor_local_factor(*f, s) : s;
    }
    factors[p] = *f;
  }
  return dirichlet_expand(factors, n_max, fe.degree, fe.weight, caps);
}

struct EvaluationConfig {
  QuadratureParams qp;
  Rational alpha{1, 1000};
  std::vector<Rational> betas{Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)};
  std::uint32_t n_tail = 20000;
  std::uint64_t window_limit = 500;
  Integer den_bound = 1000000;
};

struct PointEvaluation {
  Rational point;
  WeightSolution weights;
  NumericResult result;
  unsigned working_digits = 0;
  Rational truncation;
};

struct RatioReport {
  std::string case_id;
  std::string title;
  FunctionalEquationData fe;
  EvaluationConfig config;
  Rational t1, t2;
  int pi_power = 0;
  std::vector<PointEvaluation> points;
  Real ratio;
  Real ratio_radius;
  RationalIdentification identification;
  std::vector<PredictedPrime> predictions;
  std::vector<PredictionHit> hits;
  std::uint32_t known_primes_up_to = 0;
};

inline void require_critical(const FunctionalEquationData& fe, const Rational& t) {
  Rational twice = 2 * t;
  std::string list;
  for (auto c : critical_points(fe)) list += (list.empty() ? "" : ", ") + c.str();
  if (mp::denominator(twice) != 1 || !is_critical(fe, HalfInteger{mp::numerator(twice).convert_to<long>()}))
    throw DomainError(rational_str(t) + " not critical; critical points: " + list);
}

inline PointEvaluation evaluate_point(const FunctionalEquationData& fe, const DirichletSeries& series,
                                      const Rational& t, const EvaluationConfig& cfg) {
  require_critical(fe, t);
  auto m = coefficient_matrix(fe, cfg.betas, cfg.alpha, t, cfg.n_tail, cfg.qp);
  PointEvaluation ev;
  ev.point = t;
  ev.weights = solve_weights(m, series, cfg.window_limit);
  ev.result = combined_evaluation(m, ev.weights, series);
  ev.working_digits = m.working_digits;
  ev.truncation = m.truncation;
  return ev;
}

/// pi^m L(t1) / L(t2) with propagated radius, identified as a rational.
inline RatioReport run_ratio(const CaseSpec& c, const Rational& t1, const Rational& t2, int pi_power,
                             const std::vector<SiegelEigenvalueTable>& tables, const EvaluationConfig& cfg) {
  RatioReport rep;
  rep.case_id = c.id;
  rep.title = c.title;
  rep.fe = case_functional_equation(c);
  rep.config = cfg;
  rep.t1 = t1;
  rep.t2 = t2;
  rep.pi_power = pi_power;
  require_critical(rep.fe, t1);
  require_critical(rep.fe, t2);
  auto series = case_series(c, tables, cfg.n_tail);
  rep.known_primes_up_to = tables.empty() ? series.n_max() : tables[0].max_prime();
  for (const auto& t : tables) rep.known_primes_up_to = std::min(rep.known_primes_up_to, t.max_prime());
  rep.points.push_back(evaluate_point(rep.fe, series, t1, cfg));
  rep.points.push_back(evaluate_point(rep.fe, series, t2, cfg));
  ScopedPrecision prec(cfg.qp.working_digits());
  const Real& A = rep.points[0].result.value;
  const Real& rA = rep.points[0].result.radius;
  const Real& B = rep.points[1].result.value;
  const Real& rB = rep.points[1].result.radius;
  if (abs(B) <= rB) throw PrecisionExhausted("L(" + rational_str(t2) + ") is not separated from zero");
  Real pim = pow(pi_real(), pi_power);
  rep.ratio = pim * A / B;
  rep.ratio_radius = pim * (rA * abs(B) + abs(A) * rB) / (abs(B) * (abs(B) - rB));
  rep.identification = identify_rational(rep.ratio, rep.ratio_radius, cfg.den_bound);
  rep.predictions = predictions_for(c.id, t1, t2);
  if (rep.identification.verdict == Verdict::identified) {
    std::vector<Integer> num, den;
    for (const auto& p : rep.predictions) (p.side == Side::numerator ? num : den).push_back(p.prime);
    rep.hits = check_prediction(rep.identification, num, den);
  }
  return rep;
}

}  // namespace lcrit
