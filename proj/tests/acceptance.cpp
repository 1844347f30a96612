// One PASS/FAIL line per acceptance criterion. Criteria 3 and 4 need the
// external Siegel eigenvalue files, named by LCRIT_CASE3_DATA,
// LCRIT_CASE1_DATA and LCRIT_CASE2_DATA; without them they are reported as
// SKIP and criterion 7 stands in for them.

#include <lcrit/lcrit.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace lcrit;

namespace {

struct Outcome {
  enum { pass, fail, skip } state = fail;
  std::string detail;
};

Outcome ok(bool b, std::string detail) { return {b ? Outcome::pass : Outcome::fail, std::move(detail)}; }

int failures = 0;

void run(int id, const std::string& name, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {Outcome::fail, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const char* tag = o.state == Outcome::pass ? "PASS" : o.state == Outcome::skip ? "SKIP" : "FAIL";
  if (o.state == Outcome::fail) ++failures;
  std::ostringstream s;
  s.precision(1);
  s << std::fixed << secs;
  std::cout << tag << " criterion " << id << ": " << name << " [" << o.detail << "; " << s.str() << " s]"
            << std::endl;
}

FunctionalEquationData case3_fe() { return case_functional_equation(find_case("case3")); }

std::vector<Rational> fine_grid() {
  std::vector<Rational> b;
  for (int i = 0; i <= 30; ++i) b.emplace_back(i, 10);
  return b;
}

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return v && *v ? v : nullptr;
}

Outcome criterion1() {
  QuadratureParams qp;
  auto m = coefficient_matrix(case3_fe(), {Rational(0)}, Rational(1, 1000), Rational(1), 181, qp);
  ScopedPrecision prec(m.working_digits);
  Real certified("1.2453392504912166301069081878583745765950");
  Real err = abs(m.c[0][1] - certified);
  bool good = err < Real("1e-35");
  for (auto [n, s] : std::vector<std::pair<int, const char*>>{
           {2, "0.534"}, {3, "0.269"}, {17, "0.000668"}, {101, "2.10e-10"}, {181, "8.56e-14"}})
    good = good && oracle::truncates_to(m.c[0][n], s);
  return ok(good, "c0(1) = " + m.c[0][1].str(40) + ", |diff| = " + err.str(2));
}

Outcome criterion2() {
  QuadratureParams qp;
  auto m = coefficient_matrix(case3_fe(), {Rational(3, 2)}, Rational(1, 1000), Rational(1), 181, qp);
  bool good = true;
  std::string got;
  for (auto [n, s] : std::vector<std::pair<int, const char*>>{
           {1, "1.870"}, {2, "0.937"}, {3, "0.017"}, {17, "0.0097"}, {101, "-2.10e-8"}, {181, "-9.44e-12"}}) {
    good = good && oracle::truncates_to(m.c[0][n], s);
    got += (got.empty() ? "" : ", ") + m.c[0][n].str(4);
  }
  return ok(good, got + ", T = " + rational_str(m.truncation));
}

Outcome criterion3() {
  const char* path = env("LCRIT_CASE3_DATA");
  if (!path) return {Outcome::skip, "LCRIT_CASE3_DATA not set; replaced by criterion 7"};
  EvaluationConfig cfg;
  cfg.betas = fine_grid();
  auto rep = run_ratio(find_case("case3"), Rational(1), Rational(3), 8, {load_siegel_eigenvalues(path)}, cfg);
  ScopedPrecision prec(cfg.qp.working_digits());
  Real l1("1.798902826118603032455722772619"), l3("1.105456887951321630369359341690");
  const auto& a = rep.points[0].result;
  const auto& b = rep.points[1].result;
  bool good = abs(a.value - l1) < a.radius + Real("6e-26") && abs(b.value - l3) < b.radius + Real("3e-27") &&
              rep.identification.verdict == Verdict::identified &&
              *rep.identification.candidate == Rational(123525, 8);
  return ok(good, "L(1) = " + a.value.str(31) + " +- " + a.radius.str(2) + ", L(3) = " + b.value.str(31) + " +- " +
                      b.radius.str(2) + ", ratio " + verdict_name(rep.identification.verdict) + " " +
                      ratio_factorization(rep.identification));
}

Outcome criterion4() {
  const char* p1 = env("LCRIT_CASE1_DATA");
  const char* p2 = env("LCRIT_CASE2_DATA");
  if (!p1 || !p2) return {Outcome::skip, "LCRIT_CASE1_DATA / LCRIT_CASE2_DATA not set; replaced by criterion 7"};
  EvaluationConfig cfg;
  cfg.betas = fine_grid();
  struct Want {
    const char* id;
    const char* path;
    Rational t1, t2;
    Rational value;
  };
  std::vector<Want> wants{{"case1", p1, Rational(3), Rational(5), Rational(49 * 17 * 839, 8 * 9)},
                          {"case1", p1, Rational(1), Rational(3), Rational(81 * 7 * 121 * 71, 4 * 5 * 17)},
                          {"case2", p2, Rational(1), Rational(3), Rational(3 * 625 * 7 * 169 * 193, 16 * 11 * 61)}};
  bool good = true;
  std::string detail;
  for (const auto& w : wants) {
    auto tab = load_siegel_eigenvalues(w.path);
    int m = static_cast<int>(mp::numerator(Rational(w.t2 - w.t1)).convert_to<long>()) * 4;
    auto rep = run_ratio(find_case(w.id), w.t1, w.t2, m, {tab}, cfg);
    bool hit = rep.identification.verdict == Verdict::identified && *rep.identification.candidate == w.value;
    for (const auto& h : rep.hits) hit = hit && h.hit();
    good = good && hit && !rep.hits.empty();
    detail += std::string(detail.empty() ? "" : "; ") + w.id + " " + ratio_factorization(rep.identification);
  }
  return ok(good, detail);
}

Outcome criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  bool good = true;
  std::size_t rows = 0;
  std::string detail;
  for (int id : builtin_example_ids()) {
    auto rep = verify_example(id);
    good = good && rep.pass();
    rows += rep.rows.size();
    for (const auto& m : rep.mismatches) detail += m.str() + "; ";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  good = good && secs < 1;
  return ok(good, std::to_string(rows) + " rows checked" + (detail.empty() ? "" : ": " + detail));
}

Outcome criterion6() {
  QuadratureParams qp;
  auto m = coefficient_matrix(case3_fe(), {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)},
                              Rational(1, 1000), Rational(1), 20000, qp);
  auto series = known_mask_series(8, 38, 20000, 180);
  ScopedPrecision prec(m.working_digits);
  auto r0 = partial_value(m, 0, series);
  auto sol = solve_weights(m, series);
  auto avg = combined_evaluation(m, sol, series);
  Real sum = 0;
  for (const auto& w : sol.weights) sum += w;
  std::vector<Real> printed{Real("5.595844269"), Real("-5.074113323"), Real("0.484231975"), Real("-0.0059629212")};
  Real worst = 0;
  std::string ws;
  for (std::size_t j = 0; j < 4; ++j) {
    worst = std::max(worst, Real(abs(sol.weights[j] - printed[j]) / abs(printed[j])));
    ws += (j ? ", " : "") + sol.weights[j].str(10);
  }
  Real factor = r0.radius / avg.radius;
  bool good = factor >= 50 && abs(sum - 1) <= pow(Real(10), -static_cast<int>(qp.digits)) && worst < Real("0.01");
  return ok(good, "radius " + r0.radius.str(3) + " -> " + avg.radius.str(3) + " (x" + factor.str(3) + "), weights {" +
                      ws + "}, worst relative weight deviation " + worst.str(2));
}

Outcome criterion7() {
  std::string detail;
  bool good = true;
  // (a) Klingen identity
  {
    const std::uint32_t N = 10000;
    auto f = elliptic_coefficients(16, N);
    std::map<std::uint32_t, LocalFactor> lhs, rhs;
    Sieve sieve(N);
    for (auto p : sieve.primes()) {
      lhs[p] = tensor_local_factor(hecke_local_factor(f.a[p], p, 16), klingen_spinor_factor(f.a[p], p, 16, 12));
      auto s2 = sym2_local_factor(f.a[p], p, 16);
      LocalFactor e1{p, 30, {Integer(1), Integer(-ipow(long(p), 15))}};
      LocalFactor e2{p, 50, {Integer(1), Integer(-ipow(long(p), 25))}};
      rhs[p] = multiply(multiply(multiply(e1, e2, 40), s2, 40), tate_twist(s2, 10), 40);
    }
    bool a = dirichlet_expand(lhs, N, 8, 40).b == dirichlet_expand(rhs, N, 8, 40).b;
    good = good && a;
    detail += std::string("(a) ") + (a ? "ok" : "FAILED");
  }
  // (b) Newton identities against numeric root products
  {
    ScopedPrecision prec(80);
    auto f = elliptic_coefficients(16, 50);
    std::mt19937_64 rng(7);
    Real worst = 0;
    Sieve sieve(50);
    for (auto p : sieve.primes()) {
      Integer lp = Integer(long(rng() % 2001) - 1000) * ipow(long(p), 11);
      Integer lp2 = Integer(long(rng() % 2001) - 1000) * ipow(long(p), 23);
      auto a = hecke_local_factor(f.a[p], p, 16);
      auto b = spinor_local_factor(lp, lp2, p, 4, 12);
      worst = std::max(worst, oracle::tensor_root_deviation(a, b, tensor_local_factor(a, b)));
    }
    bool b = worst < Real("1e-30");
    good = good && b;
    detail += ", (b) worst " + worst.str(2);
  }
  // (c) degree-2 beta independence
  {
    const auto& c = find_case("delta");
    auto fe = case_functional_equation(c);
    auto series = case_series(c, {}, 120);
    QuadratureParams qp;
    auto m = coefficient_matrix(fe, {Rational(0), Rational(1, 2), Rational(1)}, Rational(1, 1000), Rational(1), 120, qp);
    ScopedPrecision prec(m.working_digits);
    auto v0 = partial_value(m, 0, series);
    Real spread = 0;
    bool within = true;
    for (std::size_t r = 1; r < m.rows(); ++r) {
      auto v = partial_value(m, r, series);
      Real d = abs(v.value - v0.value);
      spread = std::max(spread, d);
      within = within && d < v.radius + v0.radius;
    }
    bool cc = within && spread < Real("1e-30");
    good = good && cc;
    detail += ", (c) spread " + spread.str(2);
  }
  // (d) step halving
  {
    QuadratureParams qp, fine;
    fine.step = qp.step / 2;
    fine.truncation = qp.truncation * 2;
    auto fe = case3_fe();
    Real worst = 0;
    for (auto beta : {Rational(0), Rational(3, 2)}) {
      AfeKernel a(fe, {Rational(1, 1000), beta}, Rational(1), qp, qp.working_digits());
      AfeKernel b(fe, {Rational(1, 1000), beta}, Rational(1), fine, fine.working_digits());
      ScopedPrecision prec(qp.working_digits());
      for (std::uint64_t n : {1, 2, 3, 17, 101, 181, 1999})
        worst = std::max(worst, Real(abs(a.coefficient(n) - b.coefficient(n))));
    }
    bool d = worst < pow(Real(10), -static_cast<int>(qp.digits - 5));
    good = good && d;
    detail += ", (d) worst " + worst.str(2);
  }
  // (e) rational round trip and factorisation
  {
    ScopedPrecision prec(60);
    std::mt19937_64 rng(3);
    const Integer bound = 1000000;
    bool e = true;
    for (int i = 0; i < 2000 && e; ++i) {
      Integer q = Integer(rng() % 1000000 + 1);
      Integer p = Integer(static_cast<long long>(rng() % 2000000000000ULL) - 1000000000000LL);
      Rational x(p, q);
      Real delta = Real(1) / Real(4 * q * bound) * Real(static_cast<double>(rng() % 999 + 1) / 1000.0) *
                   (rng() % 2 ? 1 : -1);
      auto r = identify_rational(to_real(x) + delta, abs(delta) * 2, bound);
      e = r.verdict == Verdict::identified && *r.candidate == x;
    }
    for (int i = 0; i < 10000 && e; ++i) {
      Integer n = Integer(rng() % 1000000000000000000ULL + 1);
      auto f = factorize(n);
      e = f.value() == n && f.certified;
    }
    good = good && e;
    detail += std::string(", (e) ") + (e ? "ok" : "FAILED");
  }
  return ok(good, detail);
}

Outcome criterion8() {
  auto fe = case3_fe();
  std::string shifts;
  for (const auto& s : fe.shifts) shifts += (shifts.empty() ? "" : ",") + s.str();
  auto fe16 = case_functional_equation(find_case("deg16"));
  std::string crit;
  for (const auto& c : critical_points(fe16)) crit += (crit.empty() ? "" : ",") + c.str();
  bool rejected = false;
  try {
    require_critical(fe16, Rational(3));
  } catch (const DomainError&) {
    rejected = true;
  }
  bool good = shifts == "19,11,4,4" && fe.sign == 1 && crit == "-1,0,1,2" && rejected;
  return ok(good, "case3 shifts {" + shifts + "} sign " + std::to_string(fe.sign) + ", deg16 critical {" + crit +
                      "}, t = 3 " + (rejected ? "rejected" : "accepted"));
}

}  // namespace

int main() {
  run(1, "c0(n) digits for case3", criterion1);
  run(2, "beta = 3/2 row", criterion2);
  run(3, "case3 L(1), L(3) and pi^8 L(1)/L(3)", criterion3);
  run(4, "case1 and case2 ratios with predicted primes", criterion4);
  run(5, "congruence tables 3-6", criterion5);
  run(6, "four-beta error reduction", criterion6);
  run(7, "oracle suite", criterion7);
  run(8, "gamma shifts and critical points", criterion8);
  return failures == 0 ? 0 : 1;
}
