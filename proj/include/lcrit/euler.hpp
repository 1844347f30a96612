#pragma once

// Exact Euler-factor algebra. A local factor at p is stored as the integer
// polynomial 1 + c_1 X + ... + c_d X^d with X = p^{-s} (motivic
// normalisation); its inverse roots are the Satake parameters.

#include <lcrit/arith.hpp>
#include <lcrit/primes.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcrit {

struct LocalFactor {
  std::uint32_t p = 0;
  int weight = 0;          // motivic weight w
  std::vector<Integer> c;  // c[0] == 1, size degree + 1

  int degree() const { return static_cast<int>(c.size()) - 1; }

  /// c_{d-i} == e c_i p^{w(d-2i)/2} for every i with d - 2i >= 0, where
  /// e = +-1 is fixed by i = 0 (e = -1 e.g. for odd-degree symmetric powers).
  bool is_self_dual() const {
    const int d = degree();
    if (long(weight) * d % 2 != 0) return false;
    Integer top = ipow(long(p), static_cast<unsigned long>(long(weight) * d / 2));
    int e = c[d] == top ? 1 : c[d] == -top ? -1 : 0;
    if (e == 0) return false;
    for (int i = 1; 2 * i <= d; ++i) {
      long twice = long(weight) * (d - 2 * i);
      if (twice % 2 != 0) return false;
      if (c[d - i] != e * c[i] * ipow(long(p), static_cast<unsigned long>(twice / 2))) return false;
    }
    return true;
  }

  friend bool operator==(const LocalFactor& a, const LocalFactor& b) {
    return a.p == b.p && a.weight == b.weight && a.c == b.c;
  }
};

namespace detail {

inline void require_prime(std::uint32_t p) {
  if (!is_small_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

inline void require_elliptic_weight(int l) {
  if (l < 12 || l % 2 != 0) throw DomainError("elliptic weight must be even and at least 12");
}

}  // namespace detail

/// 1 - a_p X + p^{l-1} X^2
inline LocalFactor hecke_local_factor(const Integer& a_p, std::uint32_t p, int l) {
  detail::require_prime(p);
  detail::require_elliptic_weight(l);
  return {p, l - 1, {Integer(1), Integer(-a_p), ipow(long(p), l - 1)}};
}

/// Symmetric-square factor with inverse roots alpha^2, alpha beta, beta^2.
inline LocalFactor sym2_local_factor(const Integer& a_p, std::uint32_t p, int l) {
  detail::require_prime(p);
  detail::require_elliptic_weight(l);
  Integer pw = ipow(long(p), l - 1);
  Integer e1 = a_p * a_p - pw;
  Integer e2 = pw * e1;
  Integer e3 = ipow(pw, 3);
  return {p, 2 * l - 2, {Integer(1), Integer(-e1), e2, Integer(-e3)}};
}

/// Spinor quartic of a genus-2 eigenform of weight Sym^j (x) det^k:
/// 1 - l1 X + (l1^2 - l2 - p^{j+2k-4}) X^2 - l1 p^{j+2k-3} X^3 + p^{2j+4k-6} X^4.
inline LocalFactor spinor_local_factor(const Integer& lambda_p, const Integer& lambda_p2,
                                       std::uint32_t p, int j, int k) {
  detail::require_prime(p);
  if (j < 0 || j % 2 != 0) throw DomainError("j must be even and non-negative");
  if (k < 3) throw DomainError("k must be at least 3");
  const long w = j + 2 * k - 3;
  Integer c2 = lambda_p * lambda_p - lambda_p2 - ipow(long(p), static_cast<unsigned long>(w - 1));
  Integer c3 = -lambda_p * ipow(long(p), static_cast<unsigned long>(w));
  return {p, static_cast<int>(w),
          {Integer(1), Integer(-lambda_p), c2, c3, ipow(long(p), static_cast<unsigned long>(2 * w))}};
}

/// Tate twist by m: inverse roots scaled by p^m, i.e. c_i -> c_i p^{m i}.
inline LocalFactor tate_twist(const LocalFactor& f, int m) {
  if (m < 0) throw DomainError("negative Tate twist would leave integral coefficients");
  LocalFactor out = f;
  out.weight = f.weight + 2 * m;
  Integer pm = ipow(long(f.p), static_cast<unsigned long>(m));
  Integer scale = 1;
  for (auto& ci : out.c) {
    ci *= scale;
    scale *= pm;
  }
  return out;
}

/// Polynomial product. Mixed-weight products (Eisenstein-type factors) are
/// allowed; the caller states the weight of the result.
inline LocalFactor multiply(const LocalFactor& a, const LocalFactor& b, int weight) {
  if (a.p != b.p) throw DomainError("local factors at different primes");
  LocalFactor out{a.p, weight, std::vector<Integer>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

/// Spinor factor of the Klingen-Eisenstein series [f]_j with l = j + k:
/// L(s, f) L(s - (k-2), f), inverse roots {alpha, beta, p^{k-2} alpha, p^{k-2} beta}.
inline LocalFactor klingen_spinor_factor(const Integer& a_p, std::uint32_t p, int l, int k) {
  const int j = l - k;
  if (j < 0 || j % 2 != 0) throw DomainError("Klingen factor needs l - k even and non-negative");
  if (k < 3) throw DomainError("k must be at least 3");
  LocalFactor h = hecke_local_factor(a_p, p, l);
  return multiply(h, tate_twist(h, k - 2), j + 2 * k - 3);
}

namespace detail {

/// Power sums p_1..p_n of the inverse roots of 1 + c_1 X + ... + c_d X^d.
inline std::vector<Integer> power_sums(const LocalFactor& f, int n) {
  const int d = f.degree();
  // e_i = (-1)^i c_i
  auto e = [&](int i) -> Integer {
    if (i > d) return Integer(0);
    return (i % 2) ? Integer(-f.c[i]) : f.c[i];
  };
  std::vector<Integer> ps(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    Integer s = 0;
    for (int i = 1; i < k && i <= d; ++i) {
      if (i % 2) s += e(i) * ps[k - i];
      else s -= e(i) * ps[k - i];
    }
    if (k <= d) {
      Integer t = e(k) * k;
      if (k % 2) s += t;
      else s -= t;
    }
    ps[k] = s;
  }
  return ps;
}

}  // namespace detail

/// Rankin-Selberg style tensor product: the factor whose inverse roots are
/// all products alpha_i beta_j. Computed from power sums (which multiply)
/// and Newton's identities, never from numerical roots.
inline LocalFactor tensor_local_factor(const LocalFactor& a, const LocalFactor& b) {
  if (a.p != b.p) throw DomainError("tensor product of local factors at different primes");
  const int n = a.degree() * b.degree();
  auto pa = detail::power_sums(a, n);
  auto pb = detail::power_sums(b, n);
  std::vector<Integer> ps(n + 1);
  for (int k = 1; k <= n; ++k) ps[k] = pa[k] * pb[k];

  // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
  std::vector<Integer> e(n + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Integer s = 0;
    for (int i = 1; i <= k; ++i) {
      if (i % 2) s += e[k - i] * ps[i];
      else s -= e[k - i] * ps[i];
    }
    Integer q, r;
    mp::divide_qr(s, Integer(k), q, r);
    if (r != 0)
      throw ConsistencyError("non-integral elementary symmetric function e_" + std::to_string(k) +
                             " at p = " + std::to_string(a.p));
    e[k] = q;
  }
  LocalFactor out{a.p, a.weight + b.weight, std::vector<Integer>(n + 1)};
  for (int k = 0; k <= n; ++k) out.c[k] = (k % 2) ? Integer(-e[k]) : e[k];
  return out;
}

// --- Dirichlet series ----------------------------------------------------

/// b_1..b_N in motivic normalisation. Entries with known[n] == false are
/// placeholders (zero) whose true value is not determined by the input.
struct DirichletSeries {
  int degree = 0;
  int weight = 0;
  std::vector<Integer> b;     // index 0 unused
  std::vector<char> known;    // index 0 unused

  std::uint32_t n_max() const { return static_cast<std::uint32_t>(b.size() - 1); }
  bool is_known(std::uint32_t n) const { return n < known.size() && known[n]; }
};

/// Expands prod_p 1/F_p(p^{-s}) to n_max terms. Primes without a factor make
/// every multiple unknown. `exponent_caps` limits the trusted powers of a
/// prime (e.g. only b_p is reliable when lambda(p^2) was not supplied).
inline DirichletSeries dirichlet_expand(const std::map<std::uint32_t, LocalFactor>& factors,
                                        std::uint32_t n_max, int degree, int weight,
                                        const std::map<std::uint32_t, unsigned>& exponent_caps = {}) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  for (const auto& [p, f] : factors) {
    if (f.p != p) throw DomainError("factor keyed under the wrong prime");
    if (f.degree() != degree || f.weight != weight)
      throw DomainError("local factor at p = " + std::to_string(p) + " has degree " +
                        std::to_string(f.degree()) + ", weight " + std::to_string(f.weight) +
                        "; expected " + std::to_string(degree) + ", " + std::to_string(weight));
  }
  DirichletSeries out;
  out.degree = degree;
  out.weight = weight;
  out.b.assign(n_max + 1, 0);
  out.known.assign(n_max + 1, 0);
  out.b[1] = 1;
  out.known[1] = 1;

  Sieve sieve(std::max<std::uint32_t>(n_max, 2));
  for (std::uint32_t p : sieve.primes()) {
    if (p > n_max) break;
    auto it = factors.find(p);
    if (it == factors.end()) continue;
    const auto& c = it->second.c;
    unsigned cap = ~0u;
    if (auto ci = exponent_caps.find(p); ci != exponent_caps.end()) cap = ci->second;
    // Power-series inverse: b_{p^e} = -sum_{i=1}^{min(d,e)} c_i b_{p^{e-i}}
    std::vector<Integer> pp{Integer(1)};
    std::uint64_t q = p;
    for (unsigned e = 1; q <= n_max; ++e, q *= p) {
      Integer s = 0;
      for (std::size_t i = 1; i < c.size() && i <= e; ++i) s -= c[i] * pp[e - i];
      pp.push_back(s);
      out.b[q] = s;
      out.known[q] = e <= cap;
    }
  }
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    std::uint32_t p = sieve.smallest_factor(n);
    std::uint32_t q = 1, m = n;
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    if (m == 1) continue;
    out.known[n] = out.known[q] && out.known[m];
    out.b[n] = out.known[n] ? Integer(out.b[q] * out.b[m]) : Integer(0);
  }
  for (std::uint32_t n = 2; n <= n_max; ++n)
    if (!out.known[n]) out.b[n] = 0;
  return out;
}

enum class Normalization { analytic, motivic };

/// Generalised divisor function d_d(n) = prod_{p^e || n} C(e + d - 1, d - 1):
/// the number of ways n arises as a product of d inverse roots' indices, and
/// hence the bound on |b_n| for analytically normalised coefficients
/// satisfying the Ramanujan bound at every prime.
inline Integer divisor_bound(std::uint64_t n, int degree) {
  if (n < 1) throw DomainError("coefficient index must be positive");
  Integer result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) {
      Integer binom;
      mpz_bin_uiui(binom.backend().data(), e + degree - 1, degree - 1);
      result *= binom;
    }
  }
  if (n > 1) result *= degree;
  return result;
}

inline Real coefficient_bound(std::uint64_t n, int degree, int weight, Normalization norm) {
  Real bound(divisor_bound(n, degree));
  if (norm == Normalization::motivic) {
    if (weight % 2 == 0) bound *= Real(ipow(Integer(n), static_cast<unsigned long>(weight / 2)));
    else bound *= sqrt(Real(ipow(Integer(n), static_cast<unsigned long>(weight))));
  }
  return bound;
}

}  // namespace lcrit
