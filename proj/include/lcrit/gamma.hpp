#pragma once

// Complex Gamma function at arbitrary precision.
//
// Primary route: shift the argument to the right by the recurrence
// Gamma(z+1) = z Gamma(z) until |z| is large enough, then sum the Stirling
// series with exact Bernoulli numbers. A second, independent route (Spouge's
// approximation) is provided for validation.

#include <lcrit/arith.hpp>
#include <lcrit/complex.hpp>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace lcrit {

namespace detail {

/// B_0, B_2, B_4, ... as exact rationals; grows on demand.
inline const std::vector<Rational>& even_bernoulli(std::size_t count) {
  static std::mutex mutex;
  static std::vector<Rational> table;
  std::lock_guard<std::mutex> lock(mutex);
  if (table.size() >= count) return table;
  // Akiyama-Tanigawa would need all B_n; the recurrence
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 is enough at these sizes.
  std::size_t need = 2 * count + 1;
  std::vector<Rational> b(need);
  b[0] = 1;
  for (std::size_t m = 1; m < need; ++m) {
    if (m > 1 && m % 2 == 1) {
      b[m] = 0;
      continue;
    }
    Rational s = 0;
    Integer binom = 1;  // C(m+1, j)
    for (std::size_t j = 0; j < m; ++j) {
      s += Rational(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -s / Rational(m + 1);
  }
  table.clear();
  for (std::size_t k = 0; k < count; ++k) table.push_back(b[2 * k]);
  return table;
}

}  // namespace detail

/// log Gamma(z) modulo 2 pi i. The imaginary part may differ from the
/// principal branch by a multiple of 2 pi; exp() of the result is exact.
inline Complex<Real> log_gamma_mod(const Complex<Real>& z) {
  using std::floor;
  if (z.im == 0 && z.re <= 0 && floor(z.re) == z.re)
    throw DomainError("Gamma has a pole at a non-positive integer");

  const unsigned digits = Real::default_precision();
  const double r0 = 0.4 * digits + 10.0;

  // Shift to Re(w) >= r0.
  Complex<Real> w = z;
  Complex<Real> prod(Real(1), Real(0));
  bool shifted = false;
  while (w.re < r0) {
    prod *= w;
    w.re += 1;
    shifted = true;
  }

  const Real half_log_two_pi = log(2 * pi_real()) / 2;
  Complex<Real> lw = log(w);
  Complex<Real> result = (w - Complex<Real>(Real(0.5))) * lw - w + Complex<Real>(half_log_two_pi);

  const Real eps = pow(Real(10), -static_cast<int>(digits) - 2);
  const std::size_t max_terms = static_cast<std::size_t>(3.2 * r0) + 8;
  const auto& bern = detail::even_bernoulli(max_terms + 1);
  Complex<Real> inv_w = Complex<Real>(Real(1)) / w;
  Complex<Real> inv_w2 = inv_w * inv_w;
  Complex<Real> power = inv_w;  // w^{-(2k-1)}
  for (std::size_t k = 1; k <= max_terms; ++k) {
    Real coeff = to_real(bern[k] / Rational((2 * k) * (2 * k - 1)));
    Complex<Real> term = power * coeff;
    result += term;
    if (abs(term) < eps) break;
    power *= inv_w2;
  }
  if (shifted) result -= log(prod);
  return result;
}

/// sin(pi z) for complex z.
inline Complex<Real> sin_pi(const Complex<Real>& z) {
  Real px = pi_real() * z.re;
  Real py = pi_real() * z.im;
  return {Real(sin(px) * cosh(py)), Real(cos(px) * sinh(py))};
}

inline Complex<Real> gamma(const Complex<Real>& z) { return exp(log_gamma_mod(z)); }

/// Spouge's approximation, evaluated at roughly twice the current precision
/// internally. Independent of the Stirling route; used for validation.
inline Complex<Real> gamma_spouge(const Complex<Real>& z) {
  using std::floor;
  if (z.im == 0 && z.re <= 0 && floor(z.re) == z.re)
    throw DomainError("Gamma has a pole at a non-positive integer");
  // Reflection keeps Re(z) >= 1/2 where the error bound holds.
  if (z.re < 0.5)
    return Complex<Real>(pi_real()) / (sin_pi(z) * gamma_spouge(Complex<Real>(Real(1)) - z));
  const unsigned digits = Real::default_precision();
  const unsigned inner = 2 * digits + 20;
  ScopedPrecision guard(inner);
  Complex<Real> x(with_precision(z.re, inner), with_precision(z.im, inner));
  const long a = static_cast<long>(std::ceil(1.26 * digits)) + 8;
  Complex<Real> y = x - Complex<Real>(Real(1));  // Gamma(x) = Gamma(y + 1)
  Real factorial = 1;
  Complex<Real> sum(sqrt(2 * pi_real()));
  for (long k = 1; k < a; ++k) {
    if (k > 1) factorial *= (k - 1);
    Real ck = pow(Real(a - k), Real(k) - Real(0.5)) * exp(Real(a - k)) / factorial;
    if (k % 2 == 0) ck = -ck;
    sum += Complex<Real>(ck) / (y + Complex<Real>(Real(k)));
  }
  Complex<Real> base = y + Complex<Real>(Real(a));
  Complex<Real> lead = exp((y + Complex<Real>(Real(0.5))) * log(base) - base);
  Complex<Real> out = lead * sum;
  return {with_precision(out.re, digits), with_precision(out.im, digits)};
}

}  // namespace lcrit
