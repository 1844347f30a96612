#pragma once

// Approximate functional equation with Riemann-sum Mellin integrals.
//
// For Lambda(s) = G(s) L(s) = eps Lambda(1 - s) and an even entire test
// function psi with psi(0) = 1,
//
//   L(s0) = sum_n c(n) b_n,
//   c(n)  = (1 / G(s0)) (1 / 2 pi i) int_{(nu)} psi(z) [ G(s0 + z) n^{-s0-z}
//                                       + eps G(1 - s0 + z) n^{-(1-s0)-z} ] dz / z.
//
// The test function used here is psi(z) = exp(alpha z^2) cos(beta z), the
// real part of exp(i beta z + alpha z^2); at real s0 it yields the real part
// of the coefficients obtained from exp(i beta z + alpha z^2) directly.
// The integral runs over z = nu + i t, t = -T, -T + h, ..., T.

#include <lcrit/arith.hpp>
#include <lcrit/complex.hpp>
#include <lcrit/euler.hpp>
#include <lcrit/gamma.hpp>
#include <lcrit/gamma_fe.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace lcrit {

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TestFunction {
  Rational alpha{1, 1000};
  Rational beta{0};
};

struct QuadratureParams {
  Rational nu{3};
  Rational step{1, 5};
  Rational truncation{29};
  unsigned digits = 40;       // target decimal digits
  unsigned guard_digits = 10; // extra working digits
  unsigned threads = 0;       // 0: hardware concurrency
  bool extend_truncation = true;  // grow T while the integrand at |t| = T is not negligible

  unsigned working_digits() const { return digits + guard_digits; }
  std::size_t node_count() const {
    Rational q = 2 * truncation / step;
    return static_cast<std::size_t>(mp::numerator(q).convert_to<long>()) + 1;
  }
};

inline void validate(const TestFunction& g, int degree) {
  if (g.alpha < 0) throw DomainError("test function needs alpha >= 0");
  if (g.alpha == 0) {
    double limit = degree * 3.14159265358979323846 / 4;
    if (std::fabs(g.beta.convert_to<double>()) >= limit)
      throw DomainError("with alpha = 0 the test function needs |beta| < d pi / 4");
  }
}

inline void validate(const QuadratureParams& qp, const FunctionalEquationData& fe, const Rational& s0) {
  if (qp.nu <= 0) throw DomainError("contour abscissa nu must be positive");
  if (qp.step <= 0) throw DomainError("step must be positive");
  if (qp.truncation <= 0) throw DomainError("truncation must be positive");
  if (mp::denominator(Rational(2 * qp.truncation / qp.step)) != 1)
    throw DomainError("2T / h must be an integer so the nodes are symmetric about t = 0");
  if (qp.digits < 5) throw DomainError("precision too small");
  if (fe.shifts.empty()) throw DomainError("functional equation has no gamma factors");
  Rational min_shift(fe.shifts.back().twice, 2);
  if (qp.nu + s0 + min_shift <= 0 || qp.nu + 1 - s0 + min_shift <= 0)
    throw DomainError("contour is not to the right of the gamma-factor poles");
}

namespace detail {

/// log G(w) modulo 2 pi i, G(w) = prod (2 pi)^{-(w+mu)} Gamma(w + mu).
inline Complex<Real> log_gamma_factor(const FunctionalEquationData& fe, const Complex<Real>& w) {
  Real log2pi = log(2 * pi_real());
  Complex<Real> acc;
  for (const auto& mu : fe.shifts) {
    Complex<Real> x = w + Complex<Real>(mu.to_real());
    acc += log_gamma_mod(x) - x * log2pi;
  }
  return acc;
}

/// psi(z) = exp(alpha z^2) cos(beta z)
inline Complex<Real> test_function(const TestFunction& g, const Complex<Real>& z) {
  Real alpha = to_real(g.alpha), beta = to_real(g.beta);
  return exp(z * z * alpha) * cos(z * beta);
}

}  // namespace detail

/// Precomputed node weights for one (fe, test function, s0, quadrature)
/// combination. Evaluating c(n) then costs O(nodes) multiply-adds.
class AfeKernel {
 public:
  AfeKernel(const FunctionalEquationData& fe, const TestFunction& g, const Rational& s0,
            const QuadratureParams& qp, unsigned working_digits)
      : fe_(fe), g_(g), s0_(s0), qp_(qp), digits_(working_digits) {
    validate(g, fe.degree);
    validate(qp, fe, s0);
    ScopedPrecision prec(digits_);
    h_ = to_real(qp.step);
    nu_ = to_real(qp.nu);
    truncation_ = qp.truncation;
    Rational extension = qp.step * Rational(mp::ceil(to_real(Rational(10) / qp.step)).convert_to<long>());
    while (!build()) {
      if (!qp.extend_truncation || truncation_ >= 8 * qp.truncation)
        throw DomainError("integrand at |t| = " + rational_str(truncation_) + " is " + truncation_ratio_.str(3) +
                          " of its total size; increase T or reduce beta (beta = " + rational_str(g.beta) + ")");
      truncation_ += extension;
    }
  }

  /// Cut-off actually used (T, possibly extended).
  const Rational& truncation() const { return truncation_; }

  /// Integrand size at the contour ends relative to its total absolute sum.
  const Real& truncation_ratio() const { return truncation_ratio_; }

  unsigned working_digits() const { return digits_; }
  std::size_t nodes() const { return a_.size(); }

  /// c(n) at the kernel's working precision; throws PrecisionExhausted when
  /// the imaginary part (zero in exact arithmetic) exceeds the tolerance.
  Real coefficient(std::uint64_t n) const {
    ScopedPrecision prec(digits_);
    std::vector<Complex<Real>> phase;
    phases(n, phase);
    return combine(n, phase);
  }

  /// Fills phase[k] = n^{-i t_k}.
  void phases(std::uint64_t n, std::vector<Complex<Real>>& phase) const {
    const std::size_t nodes = a_.size();
    phase.resize(nodes);
    Real L = log(Real(n));
    Complex<Real> ratio = expi(Real(-h_ * L));
    phase[0] = expi(Real(T_ * L));
    for (std::size_t k = 1; k < nodes; ++k) {
      mul_into(phase[k], phase[k - 1], ratio);
    }
  }

  Real combine(std::uint64_t n, const std::vector<Complex<Real>>& phase) const {
    Complex<Real> s1, s2;
    dot(a_, phase, s1);
    dot(b_, phase, s2);
    Real s = to_real(s0_);
    Real L = log(Real(n));
    Real m1 = exp(-(s + nu_) * L);
    Real m2 = exp((s - 1 - nu_) * L);
    Real re = m1 * s1.re + m2 * s2.re;
    Real im = m1 * s1.im + m2 * s2.im;
    Real tol = (m1 * abs_a_ + m2 * abs_b_) * pow(Real(10), -static_cast<int>(qp_.digits));
    if (abs(im) > tol)
      throw PrecisionExhausted("imaginary residue " + Real(abs(im)).str(3) + " exceeds " + tol.str(3) +
                               " at n = " + std::to_string(n) + "; raise the working precision");
    return re;
  }

  /// Rigorous-style majorant of sum_{n > N} d_d(n) |c(n)|, from
  /// |c(n)| <= M1 n^{-s0-nu'} + M2 n^{s0-1-nu'} on a shifted contour and
  /// d_d(n) <= n^{d-1}; minimised over a few abscissae nu'.
  Real tail_majorant(std::uint64_t N) const {
    ScopedPrecision prec(digits_);
    Real s = to_real(s0_);
    Real best = -1;
    Complex<Real> log_g0 = detail::log_gamma_factor(fe_, Complex<Real>(s));
    const int d = fe_.degree;
    for (int extra : {10, 20, 30, 40, 60}) {
      Real nup = nu_ + extra;
      Real sigma1 = s + nup, sigma2 = 1 - s + nup;
      if (sigma1 <= d + 1 || sigma2 <= d + 1) continue;
      Real m1 = 0, m2 = 0;
      for (std::size_t k = 0; k < a_.size(); ++k) {
        Complex<Real> z(nup, Real(-T_ + h_ * k));
        Complex<Real> psi = detail::test_function(g_, z);
        Complex<Real> w1 = Complex<Real>(s) + z;
        Complex<Real> w2 = Complex<Real>(Real(1) - s) + z;
        m1 += abs(exp(detail::log_gamma_factor(fe_, w1) - log_g0) * psi / z);
        m2 += abs(exp(detail::log_gamma_factor(fe_, w2) - log_g0) * psi / z);
      }
      Real factor = h_ / (2 * pi_real());
      // Allow for the truncated part of the contour and quadrature error.
      m1 *= 2 * factor;
      m2 *= 2 * factor;
      Real LN = log(Real(N));
      Real t1 = m1 * exp((d - sigma1) * LN) / (sigma1 - d);
      Real t2 = m2 * exp((d - sigma2) * LN) / (sigma2 - d);
      Real total = t1 + t2;
      if (best < 0 || total < best) best = total;
    }
    return best < 0 ? Real(0) : best;
  }

  /// Bound on |c(n) - exact| from the Riemann sum itself. By Poisson
  /// summation the sum equals the exact integral plus aliases at
  /// n e^{2 pi m / h}; the m = -1 alias is e^{-2 pi nu / h} times the
  /// residue at z = 0, which dominates. Doubled for safety.
  Real discretisation_bound(std::uint64_t n) const {
    ScopedPrecision prec(digits_);
    Real s = to_real(s0_);
    Real L = log(Real(n));
    return alias_ * (exp(-s * L) + residue_b_ * exp((s - 1) * L));
  }

 private:
  /// Fills the node weights for the current cut-off; false if the
  /// integrand at the ends is not negligible at the target precision.
  bool build() {
    T_ = to_real(truncation_);
    const std::size_t nodes =
        static_cast<std::size_t>(mp::numerator(Rational(2 * truncation_ / qp_.step)).convert_to<long>()) + 1;
    Real s = to_real(s0_);
    Complex<Real> log_g0 = detail::log_gamma_factor(fe_, Complex<Real>(s));
    // Common factor h / (2 pi G(s0)).
    Real scale = h_ / (2 * pi_real());
    a_.clear();
    b_.clear();
    a_.reserve(nodes);
    b_.reserve(nodes);
    abs_a_ = 0;
    abs_b_ = 0;
    for (std::size_t k = 0; k < nodes; ++k) {
      Complex<Real> z(nu_, Real(-T_ + h_ * k));
      Complex<Real> psi = detail::test_function(g_, z);
      Complex<Real> w1 = Complex<Real>(s) + z;
      Complex<Real> w2 = Complex<Real>(Real(1) - s) + z;
      Complex<Real> f1 = exp(detail::log_gamma_factor(fe_, w1) - log_g0) * psi / z * scale;
      Complex<Real> f2 = exp(detail::log_gamma_factor(fe_, w2) - log_g0) * psi / z * scale;
      if (fe_.sign < 0) f2 = -f2;
      abs_a_ += abs(f1);
      abs_b_ += abs(f2);
      a_.push_back(std::move(f1));
      b_.push_back(std::move(f2));
    }
    // Relative size of the integrand where the contour is cut off; the
    // neglected part of the integral is of this order for every n.
    Real edge = std::max({Real(abs(a_.front())), Real(abs(a_.back())), Real(abs(b_.front())),
                          Real(abs(b_.back()))});
    truncation_ratio_ = edge / (abs_a_ + abs_b_);
    alias_ = 2 * exp(-2 * pi_real() * nu_ / h_);
    try {
      residue_b_ = abs(exp(detail::log_gamma_factor(fe_, Complex<Real>(Real(1) - s)) - log_g0));
    } catch (const DomainError&) {
      residue_b_ = (abs_a_ + abs_b_) * 2 * pi_real() / h_;
    }
    return truncation_ratio_ <= pow(Real(10), -static_cast<int>(qp_.digits));
  }

  static void mul_into(Complex<Real>& out, const Complex<Real>& x, const Complex<Real>& y) {
    // out = x * y without temporaries
    mpfr_ptr ore = out.re.backend().data();
    mpfr_ptr oim = out.im.backend().data();
    mpfr_srcptr xr = x.re.backend().data(), xi = x.im.backend().data();
    mpfr_srcptr yr = y.re.backend().data(), yi = y.im.backend().data();
    mpfr_set_prec(ore, mpfr_get_prec(xr));
    mpfr_set_prec(oim, mpfr_get_prec(xr));
    mpfr_fmms(ore, xr, yr, xi, yi, MPFR_RNDN);
    mpfr_fmma(oim, xr, yi, xi, yr, MPFR_RNDN);
  }

  static void dot(const std::vector<Complex<Real>>& w, const std::vector<Complex<Real>>& phase,
                  Complex<Real>& acc) {
    mpfr_prec_t prec = mpfr_get_prec(w[0].re.backend().data());
    mpfr_t re, im, t;
    mpfr_inits2(prec, re, im, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    for (std::size_t k = 0; k < w.size(); ++k) {
      mpfr_srcptr ar = w[k].re.backend().data(), ai = w[k].im.backend().data();
      mpfr_srcptr pr = phase[k].re.backend().data(), pi = phase[k].im.backend().data();
      mpfr_fmms(t, ar, pr, ai, pi, MPFR_RNDN);
      mpfr_add(re, re, t, MPFR_RNDN);
      mpfr_fmma(t, ar, pi, ai, pr, MPFR_RNDN);
      mpfr_add(im, im, t, MPFR_RNDN);
    }
    mpfr_set_prec(acc.re.backend().data(), prec);
    mpfr_set_prec(acc.im.backend().data(), prec);
    mpfr_set(acc.re.backend().data(), re, MPFR_RNDN);
    mpfr_set(acc.im.backend().data(), im, MPFR_RNDN);
    mpfr_clears(re, im, t, static_cast<mpfr_ptr>(nullptr));
  }

  FunctionalEquationData fe_;
  TestFunction g_;
  Rational s0_;
  QuadratureParams qp_;
  unsigned digits_;
  Real h_, T_, nu_;
  std::vector<Complex<Real>> a_, b_;
  Real abs_a_, abs_b_;
  Real alias_, residue_b_;
  Real truncation_ratio_;
  Rational truncation_;
};

/// c(n) for a single index, at qp.digits target precision.
inline Real afe_coefficient(const FunctionalEquationData& fe, const TestFunction& g, const Rational& s0,
                            std::uint64_t n, const QuadratureParams& qp) {
  if (n < 1) throw DomainError("coefficient index must be positive");
  AfeKernel kernel(fe, g, s0, qp, qp.working_digits());
  return kernel.coefficient(n);
}

struct AfeCoefficientMatrix {
  FunctionalEquationData fe;
  QuadratureParams qp;
  Rational alpha;
  Rational s0;
  std::vector<Rational> betas;
  std::uint64_t n_max = 0;
  unsigned working_digits = 0;      // precision actually used (after retries)
  Rational truncation;              // cut-off actually used
  std::vector<std::vector<Real>> c; // c[row][n], n = 1..n_max; index 0 unused
  std::vector<Real> tail;           // per-row majorant of sum_{n > n_max} d_d(n)|c(n)|
  std::vector<Real> discretisation; // per-row bound on sum_{n <= n_max} d_d(n)|c(n) - exact|

  std::size_t rows() const { return betas.size(); }
  std::span<const Real> row(std::size_t r) const { return c.at(r); }
};

namespace detail {

inline void fill_rows(const std::vector<AfeKernel>& kernels, std::uint64_t n_max,
                      std::vector<std::vector<Real>>& c, unsigned threads) {
  const std::size_t rows = kernels.size();
  for (auto& r : c) r.assign(n_max + 1, Real(0));
  if (n_max == 0) return;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_max));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned id) {
    try {
      std::vector<Complex<Real>> phase;
      // Strided assignment balances the cost, which grows slowly with n.
      for (std::uint64_t n = 1 + id; n <= n_max; n += threads) {
        kernels[0].phases(n, phase);
        for (std::size_t r = 0; r < rows; ++r) c[r][n] = kernels[r].combine(n, phase);
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

/// c_beta(n) for every beta and 1 <= n <= n_max. On a failed residue check
/// the whole matrix is recomputed with doubled working precision (up to
/// three times).
inline AfeCoefficientMatrix coefficient_matrix(const FunctionalEquationData& fe,
                                               const std::vector<Rational>& betas,
                                               const Rational& alpha, const Rational& s0,
                                               std::uint64_t n_max, const QuadratureParams& qp) {
  if (betas.empty()) throw DomainError("at least one beta is required");
  AfeCoefficientMatrix m;
  m.fe = fe;
  m.qp = qp;
  m.alpha = alpha;
  m.s0 = s0;
  m.betas = betas;
  m.n_max = n_max;
  unsigned digits = qp.working_digits();
  for (int attempt = 0;; ++attempt) {
    try {
      ScopedPrecision prec(digits);
      std::vector<AfeKernel> kernels;
      for (const auto& b : betas) kernels.emplace_back(fe, TestFunction{alpha, b}, s0, qp, digits);
      // Rows share one node set, so every row uses the largest cut-off.
      Rational T = qp.truncation;
      for (const auto& k : kernels) T = std::max(T, k.truncation());
      QuadratureParams shared = qp;
      shared.truncation = T;
      for (std::size_t r = 0; r < kernels.size(); ++r)
        if (kernels[r].truncation() != T) kernels[r] = AfeKernel(fe, TestFunction{alpha, betas[r]}, s0, shared, digits);
      m.truncation = T;
      m.c.assign(betas.size(), {});
      detail::fill_rows(kernels, n_max, m.c, qp.threads);
      m.tail.clear();
      for (const auto& k : kernels) m.tail.push_back(k.tail_majorant(std::max<std::uint64_t>(n_max, 1)));
      m.discretisation.assign(kernels.size(), Real(0));
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        Real d(divisor_bound(n, fe.degree));
        for (std::size_t r = 0; r < kernels.size(); ++r) m.discretisation[r] += d * kernels[r].discretisation_bound(n);
      }
      m.working_digits = digits;
      return m;
    } catch (const PrecisionExhausted&) {
      if (attempt == 3) throw;
      digits *= 2;
    }
  }
}

struct NumericResult {
  Real value;
  Real radius;
  std::vector<Rational> betas;
  std::vector<Real> weights;
  std::uint64_t known_count = 0;    // known coefficients used (n <= n_max)
  std::uint64_t unknown_count = 0;  // unknown coefficients bounded
  std::uint64_t n_tail = 0;
  Real rounding;                    // precision floor included in radius
  Real discretisation;              // quadrature error bound included in radius
};

/// b_n / n^{w/2} as a real at the current precision.
inline Real analytic_coefficient(const DirichletSeries& series, std::uint64_t n) {
  Real v(series.b[n]);
  if (series.weight % 2 == 0) return v / Real(ipow(Integer(n), static_cast<unsigned long>(series.weight / 2)));
  return v / sqrt(Real(ipow(Integer(n), static_cast<unsigned long>(series.weight))));
}

/// Evaluates sum c(n) b_n over the known coefficients; the unknown ones up to
/// the row length are bounded by d_d(n)|c(n)|, the rest by `tail`, and the
/// quadrature error of the row by `discretisation`. The
/// radius also carries 10^{-digits} of sum |c(n) b_n| for the finite
/// precision of the coefficients.
inline NumericResult partial_value(std::span<const Real> c, const DirichletSeries& series, const Real& tail,
                                   unsigned digits, const Real& discretisation = Real(0)) {
  NumericResult r;
  r.discretisation = discretisation;
  r.value = 0;
  r.radius = 0;
  Real absolute = 0;
  const std::uint64_t N = c.empty() ? 0 : c.size() - 1;
  r.n_tail = N;
  for (std::uint64_t n = 1; n <= N; ++n) {
    if (n <= series.n_max() && series.is_known(n)) {
      Real term = c[n] * analytic_coefficient(series, n);
      absolute += abs(term);
      r.value += term;
      ++r.known_count;
    } else {
      r.radius += abs(c[n]) * Real(divisor_bound(n, series.degree));
      ++r.unknown_count;
    }
  }
  r.rounding = absolute * pow(Real(10), -static_cast<int>(digits));
  r.radius += tail + r.rounding + r.discretisation;
  return r;
}

inline NumericResult partial_value(const AfeCoefficientMatrix& m, std::size_t row, const DirichletSeries& series) {
  ScopedPrecision prec(m.working_digits);
  auto r = partial_value(m.row(row), series, m.tail.at(row), m.qp.digits, m.discretisation.at(row));
  r.betas = {m.betas.at(row)};
  r.weights = {Real(1)};
  return r;
}

}  // namespace lcrit
