#pragma once

// Least-squares combination of AFE coefficient rows. The weights minimise
// the size of the unknown-coefficient contribution subject to sum w = 1.

#include <lcrit/afe.hpp>
#include <lcrit/primes.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace lcrit {

struct WeightSolution {
  std::vector<Rational> betas;
  std::vector<Real> weights;
  Real objective;
  std::vector<std::uint64_t> window;
  bool singular = false;  // minimum-norm fallback was used
};

/// Series with no coefficient values, only the known mask: n is known iff
/// every prime factor of n is at most `limit` (the local factors there are
/// available, so every prime power is determined).
inline DirichletSeries known_mask_series(int degree, int weight, std::uint32_t n_max, std::uint32_t limit) {
  DirichletSeries s;
  s.degree = degree;
  s.weight = weight;
  s.b.assign(n_max + 1, Integer(0));
  s.known.assign(n_max + 1, 0);
  Sieve sieve(std::max<std::uint32_t>(n_max, 2));
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    bool ok = true;
    for (auto [p, e] : sieve.factor(n))
      if (p > limit) ok = false;
    s.known[n] = ok;
  }
  return s;
}

/// Unknown prime indices up to `limit` (the default objective window).
inline std::vector<std::uint64_t> unknown_prime_window(const DirichletSeries& series, std::uint64_t limit = 500) {
  std::vector<std::uint64_t> out;
  Sieve sieve(static_cast<std::uint32_t>(std::max<std::uint64_t>(limit, 2)));
  for (auto p : sieve.primes()) {
    if (p > limit) break;
    if (p > series.n_max() || !series.is_known(static_cast<std::uint32_t>(p))) out.push_back(p);
  }
  return out;
}

namespace detail {

/// Symmetric eigen-decomposition by cyclic Jacobi rotations.
inline void jacobi_eigen(std::vector<std::vector<Real>> a, std::vector<Real>& values,
                         std::vector<std::vector<Real>>& vectors) {
  const std::size_t n = a.size();
  vectors.assign(n, std::vector<Real>(n, Real(0)));
  for (std::size_t i = 0; i < n; ++i) vectors[i][i] = 1;
  Real eps = pow(Real(10), -static_cast<int>(Real::default_precision()));
  for (int sweep = 0; sweep < 100; ++sweep) {
    Real off = 0, total = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += a[i][j] * a[i][j];
        if (i != j) off += a[i][j] * a[i][j];
      }
    if (off <= eps * eps * total) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0) continue;
        Real theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        Real t = (theta >= 0 ? Real(1) : Real(-1)) / (abs(theta) + sqrt(theta * theta + 1));
        Real c = 1 / sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          Real akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          Real apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          Real vkp = vectors[k][p], vkq = vectors[k][q];
          vectors[k][p] = c * vkp - s * vkq;
          vectors[k][q] = s * vkp + c * vkq;
        }
      }
  }
  values.resize(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i][i];
}

/// Gaussian elimination with partial pivoting; false if a pivot is
/// negligible relative to the matrix scale.
inline bool solve_linear(std::vector<std::vector<Real>> a, std::vector<Real> b, std::vector<Real>& x) {
  const std::size_t n = a.size();
  Real scale = 0;
  for (auto& row : a)
    for (auto& v : row) scale = std::max(scale, Real(abs(v)));
  Real tol = scale * pow(Real(10), -static_cast<int>(Real::default_precision()) + 10);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
    if (abs(a[piv][col]) <= tol) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Real f = a[r][col] / a[col][col];
      if (f == 0) continue;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, Real(0));
  for (std::size_t i = n; i-- > 0;) {
    Real acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return true;
}

inline Real weighted_objective(const AfeCoefficientMatrix& m, const std::vector<Real>& w,
                               const std::vector<std::uint64_t>& window, const std::vector<Real>& bounds) {
  Real obj = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    Real comb = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) comb += w[r] * m.c[r][window[i]];
    obj += bounds[i] * bounds[i] * comb * comb;
  }
  return obj;
}

}  // namespace detail

/// Minimises sum_{n in window} bound(n)^2 (sum_j w_j c_j(n))^2 with sum w = 1.
inline WeightSolution solve_weights(const AfeCoefficientMatrix& m, const std::vector<std::uint64_t>& window,
                                    const std::vector<Real>& bounds) {
  if (m.rows() == 0) throw DomainError("no coefficient rows");
  if (bounds.size() != window.size()) throw DomainError("one bound per window index is required");
  for (auto n : window)
    if (n < 1 || n > m.n_max) throw DomainError("window index " + std::to_string(n) + " outside the matrix");
  ScopedPrecision prec(m.working_digits);
  const std::size_t k = m.rows();
  WeightSolution sol;
  sol.betas = m.betas;
  sol.window = window;
  if (k == 1 || window.empty()) {
    sol.weights.assign(k, Real(0));
    if (k == 1) sol.weights[0] = 1;
    else for (auto& w : sol.weights) w = Real(1) / k;
    sol.objective = detail::weighted_objective(m, sol.weights, window, bounds);
    return sol;
  }
  // Bordered normal equations [[2A, 1], [1^T, 0]] [w; lambda] = [0; 1].
  std::vector<std::vector<Real>> a(k + 1, std::vector<Real>(k + 1, Real(0)));
  for (std::size_t i = 0; i < window.size(); ++i) {
    Real b2 = bounds[i] * bounds[i];
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = r; s < k; ++s) a[r][s] += 2 * b2 * m.c[r][window[i]] * m.c[s][window[i]];
  }
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < r; ++s) a[r][s] = a[s][r];
    a[r][k] = 1;
    a[k][r] = 1;
  }
  std::vector<Real> rhs(k + 1, Real(0));
  rhs[k] = 1;
  std::vector<Real> x;
  if (!detail::solve_linear(a, rhs, x)) {
    sol.singular = true;
    std::vector<Real> values;
    std::vector<std::vector<Real>> vectors;
    detail::jacobi_eigen(a, values, vectors);
    Real top = 0;
    for (auto& v : values) top = std::max(top, Real(abs(v)));
    Real tol = top * pow(Real(10), -static_cast<int>(m.working_digits) + 10);
    x.assign(k + 1, Real(0));
    for (std::size_t e = 0; e <= k; ++e) {
      if (abs(values[e]) <= tol) continue;
      Real proj = 0;
      for (std::size_t i = 0; i <= k; ++i) proj += vectors[i][e] * rhs[i];
      for (std::size_t i = 0; i <= k; ++i) x[i] += vectors[i][e] * proj / values[e];
    }
  }
  sol.weights.assign(x.begin(), x.begin() + static_cast<long>(k));
  Real sum = 0;
  for (auto& w : sol.weights) sum += w;
  Real shift = (1 - sum) / k;
  for (auto& w : sol.weights) w += shift;
  Real head = 0;
  for (std::size_t r = 0; r + 1 < k; ++r) head += sol.weights[r];
  sol.weights[k - 1] = 1 - head;
  sol.objective = detail::weighted_objective(m, sol.weights, window, bounds);
  return sol;
}

/// Default objective: unknown primes up to `limit`, Ramanujan-bound weighted.
inline WeightSolution solve_weights(const AfeCoefficientMatrix& m, const DirichletSeries& series,
                                    std::uint64_t limit = 500) {
  auto window = unknown_prime_window(series, std::min<std::uint64_t>(limit, m.n_max));
  std::vector<Real> bounds;
  ScopedPrecision prec(m.working_digits);
  for (auto n : window) bounds.emplace_back(divisor_bound(n, series.degree));
  return solve_weights(m, window, bounds);
}

/// sum_j w_j L_{beta_j}(s0) with the radius taken from the combined
/// coefficients sum_j w_j c_j(n).
inline NumericResult combined_evaluation(const AfeCoefficientMatrix& m, const std::vector<Real>& weights,
                                         const DirichletSeries& series) {
  if (weights.size() != m.rows()) throw DomainError("one weight per coefficient row is required");
  ScopedPrecision prec(m.working_digits);
  Real sum = 0;
  for (auto& w : weights) sum += w;
  if (abs(sum - 1) > pow(Real(10), -static_cast<int>(m.qp.digits)))
    throw DomainError("weights must sum to 1");
  std::vector<Real> combined(m.n_max + 1, Real(0));
  Real tail = 0, disc = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::uint64_t n = 1; n <= m.n_max; ++n) combined[n] += weights[r] * m.c[r][n];
    tail += abs(weights[r]) * m.tail[r];
    disc += abs(weights[r]) * m.discretisation[r];
  }
  auto result = partial_value(std::span<const Real>(combined), series, tail, m.qp.digits, disc);
  result.betas = m.betas;
  result.weights = weights;
  return result;
}

inline NumericResult combined_evaluation(const AfeCoefficientMatrix& m, const WeightSolution& w,
                                         const DirichletSeries& series) {
  return combined_evaluation(m, w.weights, series);
}

}  // namespace lcrit
