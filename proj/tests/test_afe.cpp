#include <lcrit/afe.hpp>
#include <lcrit/cases.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lcrit;

namespace {

FunctionalEquationData case3_fe() { return functional_equation(hodge_points(16, 6, 10)); }
FunctionalEquationData delta_fe() { return functional_equation(elliptic_hodge(12)); }

::testing::AssertionResult truncates_to(const Real& x, const std::string& printed) {
  if (oracle::truncates_to(x, printed)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << x.str(12) << " does not truncate to " << printed;
}

}  // namespace

TEST(Afe, Beta0RowMatchesPrintedDigits) {
  QuadratureParams qp;
  auto m = coefficient_matrix(case3_fe(), {Rational(0)}, Rational(1, 1000), Rational(1), 181, qp);
  EXPECT_EQ(m.truncation, Rational(29));
  ScopedPrecision prec(m.working_digits);
  Real certified("1.2453392504912166301069081878583745765950");
  EXPECT_LT(abs(m.c[0][1] - certified), Real("1e-35"));
  EXPECT_TRUE(truncates_to(m.c[0][1], "1.245"));
  EXPECT_TRUE(truncates_to(m.c[0][2], "0.534"));
  EXPECT_TRUE(truncates_to(m.c[0][3], "0.269"));
  EXPECT_TRUE(truncates_to(m.c[0][17], "0.000668"));
  EXPECT_TRUE(truncates_to(m.c[0][101], "2.10e-10"));
  EXPECT_TRUE(truncates_to(m.c[0][181], "8.56e-14"));
}

TEST(Afe, Beta0FarCoefficients) {
  QuadratureParams qp;
  auto m = coefficient_matrix(case3_fe(), {Rational(0)}, Rational(1, 1000), Rational(1), 2000, qp);
  EXPECT_TRUE(truncates_to(m.c[0][191], "3.81e-14"));
  EXPECT_TRUE(truncates_to(m.c[0][193], "3.25e-14"));
  EXPECT_TRUE(truncates_to(m.c[0][197], "2.37e-14"));
  EXPECT_TRUE(truncates_to(m.c[0][499], "1.1e-21"));
  EXPECT_TRUE(truncates_to(m.c[0][1009], "5.5e-29"));
  EXPECT_TRUE(truncates_to(m.c[0][1499], "7.3e-34"));
  EXPECT_TRUE(truncates_to(m.c[0][1999], "8.3e-38"));
  // Strict decay of |c(n)| over n <= 500.
  for (std::uint64_t n = 2; n <= 500; ++n) EXPECT_LT(abs(m.c[0][n]), abs(m.c[0][n - 1])) << n;
}

TEST(Afe, Beta3HalfRowMatchesPrintedDigits) {
  QuadratureParams qp;
  auto m = coefficient_matrix(case3_fe(), {Rational(3, 2)}, Rational(1, 1000), Rational(1), 1999, qp);
  EXPECT_GT(m.truncation, Rational(29));
  EXPECT_TRUE(truncates_to(m.c[0][1], "1.870"));
  EXPECT_TRUE(truncates_to(m.c[0][2], "0.937"));
  EXPECT_TRUE(truncates_to(m.c[0][3], "0.017"));
  EXPECT_TRUE(truncates_to(m.c[0][17], "0.0097"));
  EXPECT_TRUE(truncates_to(m.c[0][101], "-2.10e-8"));
  EXPECT_TRUE(truncates_to(m.c[0][181], "-9.44e-12"));
  EXPECT_TRUE(truncates_to(m.c[0][499], "4.6e-19"));
  EXPECT_TRUE(truncates_to(m.c[0][1009], "4.7e-25"));
  EXPECT_TRUE(truncates_to(m.c[0][1499], "1.3e-29"));
  EXPECT_TRUE(truncates_to(m.c[0][1999], "-4.2e-33"));
}

// Magnitudes listed next to the unknown coefficients in the beta = 3/2 error estimate.
TEST(Afe, Beta3HalfEstimateMagnitudes) {
  QuadratureParams qp;
  auto m = coefficient_matrix(case3_fe(), {Rational(3, 2)}, Rational(1, 1000), Rational(1), 197, qp);
  ScopedPrecision prec(m.working_digits);
  EXPECT_TRUE(truncates_to(abs(m.c[0][181]), "9.44e-12"));
  EXPECT_TRUE(truncates_to(abs(m.c[0][191]), "9.42e-12"));
  EXPECT_TRUE(truncates_to(abs(m.c[0][193]), "8.85e-12"));
  EXPECT_TRUE(truncates_to(abs(m.c[0][197]), "7.54e-12"));
}

TEST(Afe, HalvedStepResolvesTinyCoefficients) {
  // At h = 1/5 the Riemann sum has an aliasing floor near e^{-2 pi nu / h};
  // with h = 1/10 the n = 4999 coefficients come out at their true size.
  QuadratureParams coarse;
  QuadratureParams fine = coarse;
  fine.step = Rational(1, 10);
  auto fe = case3_fe();
  AfeKernel k0(fe, {Rational(1, 1000), Rational(0)}, Rational(1), fine, fine.working_digits());
  AfeKernel k1(fe, {Rational(1, 1000), Rational(3, 2)}, Rational(1), fine, fine.working_digits());
  EXPECT_TRUE(truncates_to(k0.coefficient(4999), "6.7e-53"));
  EXPECT_TRUE(truncates_to(k1.coefficient(4999), "5.2e-47"));
  AfeKernel c0(fe, {Rational(1, 1000), Rational(0)}, Rational(1), coarse, coarse.working_digits());
  ScopedPrecision prec(coarse.working_digits());
  Real err = abs(c0.coefficient(4999) - k0.coefficient(4999));
  EXPECT_GT(err, Real("1e-45"));
  EXPECT_LT(err, c0.discretisation_bound(4999));
}

TEST(Afe, StepHalvingStability) {
  QuadratureParams qp;
  QuadratureParams fine = qp;
  fine.step = qp.step / 2;
  fine.truncation = qp.truncation * 2;
  auto fe = case3_fe();
  for (auto beta : {Rational(0), Rational(1)}) {
    AfeKernel a(fe, {Rational(1, 1000), beta}, Rational(1), qp, qp.working_digits());
    AfeKernel b(fe, {Rational(1, 1000), beta}, Rational(1), fine, fine.working_digits());
    ScopedPrecision prec(qp.working_digits());
    for (std::uint64_t n : {1, 2, 17, 181, 1999}) {
      Real d = abs(a.coefficient(n) - b.coefficient(n));
      EXPECT_LT(d, pow(Real(10), -static_cast<int>(qp.digits - 5))) << "beta " << beta << ", n " << n;
    }
  }
}

TEST(Afe, Admissibility) {
  auto fe = case3_fe();
  QuadratureParams qp;
  EXPECT_THROW(afe_coefficient(fe, {Rational(-1, 1000), Rational(0)}, Rational(1), 1, qp), DomainError);
  EXPECT_THROW(afe_coefficient(fe, {Rational(0), Rational(7)}, Rational(1), 1, qp), DomainError);
  EXPECT_THROW(afe_coefficient(fe, {Rational(1, 1000), Rational(0)}, Rational(1), 0, qp), DomainError);
  QuadratureParams bad = qp;
  bad.step = Rational(3, 7);
  EXPECT_THROW(afe_coefficient(fe, {}, Rational(1), 1, bad), DomainError);
  bad = qp;
  bad.nu = 0;
  EXPECT_THROW(afe_coefficient(fe, {}, Rational(1), 1, bad), DomainError);
  bad = qp;
  bad.nu = Rational(1, 2);
  EXPECT_THROW(afe_coefficient(fe, {}, Rational(-5), 1, bad), DomainError);
  EXPECT_THROW(coefficient_matrix(fe, {}, Rational(1, 1000), Rational(1), 3, qp), DomainError);
  // Degree 2: the test function outgrows the gamma factor's decay.
  QuadratureParams d2;
  d2.digits = 30;
  try {
    afe_coefficient(delta_fe(), {Rational(1, 1000), Rational(3, 2)}, Rational(1, 2), 1, d2);
    FAIL() << "expected a truncation error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("increase T"), std::string::npos) << e.what();
  }
}

TEST(Afe, MatrixShapeAndDeterminism) {
  auto fe = case3_fe();
  QuadratureParams qp;
  qp.digits = 30;
  auto empty = coefficient_matrix(fe, {Rational(0)}, Rational(1, 1000), Rational(1), 0, qp);
  EXPECT_EQ(empty.rows(), 1u);
  EXPECT_EQ(empty.c[0].size(), 1u);
  qp.threads = 1;
  auto one = coefficient_matrix(fe, {Rational(0), Rational(1, 2)}, Rational(1, 1000), Rational(1), 40, qp);
  qp.threads = 3;
  auto three = coefficient_matrix(fe, {Rational(0), Rational(1, 2)}, Rational(1, 1000), Rational(1), 40, qp);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::uint64_t n = 1; n <= 40; ++n) EXPECT_EQ(one.c[r][n], three.c[r][n]);
  ScopedPrecision prec(one.working_digits);
  Real single = afe_coefficient(fe, {Rational(1, 1000), Rational(1, 2)}, Rational(1), 7, qp);
  EXPECT_EQ(single, one.c[1][7]);
}

TEST(Afe, TailMajorantBoundsComputedTail) {
  auto fe = case3_fe();
  QuadratureParams qp;
  for (auto beta : {Rational(0), Rational(1)}) {
    auto m = coefficient_matrix(fe, {beta}, Rational(1, 1000), Rational(1), 3000, qp);
    AfeKernel k(fe, {Rational(1, 1000), beta}, Rational(1), qp, m.working_digits);
    ScopedPrecision prec(m.working_digits);
    Real actual = 0;
    for (std::uint64_t n = 201; n <= 3000; ++n) actual += abs(m.c[0][n]) * Real(divisor_bound(n, 8));
    EXPECT_GT(k.tail_majorant(200), actual) << beta;
    EXPECT_LT(k.tail_majorant(3000), k.tail_majorant(200));
  }
}

// Weight-12 oracle: all coefficients known exactly.
TEST(Afe, DeltaValueAgainstIndependentOracle) {
  const auto& c = find_case("delta");
  auto fe = case_functional_equation(c);
  auto series = case_series(c, {}, 120);
  QuadratureParams qp;
  qp.digits = 40;
  auto m = coefficient_matrix(fe, {Rational(0), Rational(1, 4), Rational(1, 2)}, Rational(1, 1000), Rational(1, 2),
                              120, qp);
  ScopedPrecision prec(m.working_digits);
  // L(Delta, 6) via incomplete-gamma series at high precision (mpmath).
  Real oracle("0.792122838646030569355944890486735838151910794");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto v = partial_value(m, r, series);
    EXPECT_EQ(v.unknown_count, 0u);
    EXPECT_LT(abs(v.value - oracle), Real("1e-30")) << "beta " << m.betas[r];
    EXPECT_LT(abs(v.value - oracle), v.radius + Real("1e-38")) << "beta " << m.betas[r];
    EXPECT_LT(v.radius, Real("1e-30"));
  }
}

TEST(Afe, DeltaBetaIndependenceAtOne) {
  const auto& c = find_case("delta");
  auto fe = case_functional_equation(c);
  auto series = case_series(c, {}, 120);
  QuadratureParams qp;
  qp.digits = 40;
  auto m = coefficient_matrix(fe, {Rational(0), Rational(1, 2), Rational(1)}, Rational(1, 1000), Rational(1), 120, qp);
  ScopedPrecision prec(m.working_digits);
  auto v0 = partial_value(m, 0, series);
  for (std::size_t r = 1; r < m.rows(); ++r) {
    auto v = partial_value(m, r, series);
    EXPECT_LT(abs(v.value - v0.value), v.radius + v0.radius) << "beta " << m.betas[r];
    EXPECT_LT(abs(v.value - v0.value), Real("1e-30")) << "beta " << m.betas[r];
  }
}

TEST(Afe, DeltaFunctionalEquation) {
  // Lambda(s) = G(s) L(s) is symmetric under s -> 1 - s.
  const auto& c = find_case("delta");
  auto fe = case_functional_equation(c);
  auto series = case_series(c, {}, 120);
  QuadratureParams qp;
  qp.digits = 40;
  for (auto s : {Rational(5, 2), Rational(7, 2)}) {
    auto a = coefficient_matrix(fe, {Rational(0)}, Rational(1, 1000), s, 120, qp);
    auto b = coefficient_matrix(fe, {Rational(0)}, Rational(1, 1000), 1 - s, 120, qp);
    ScopedPrecision prec(a.working_digits);
    auto va = partial_value(a, 0, series);
    auto vb = partial_value(b, 0, series);
    Real ga = exp(detail::log_gamma_factor(fe, Complex<Real>(to_real(s)))).re;
    Real gb = exp(detail::log_gamma_factor(fe, Complex<Real>(to_real(Rational(1 - s))))).re;
    Real la = ga * va.value, lb = gb * vb.value;
    EXPECT_LT(abs(la - lb), abs(ga) * va.radius + abs(gb) * vb.radius + abs(la) * Real("1e-35")) << s;
    EXPECT_LT(abs(la - lb) / abs(la), Real("1e-30")) << s;
  }
}
