#pragma once

// Rational reconstruction of value +- radius, integer factorisation and
// predicted-prime checks.

#include <lcrit/arith.hpp>
#include <lcrit/primes.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcrit {

struct Factorization {
  int sign = 1;  // 0 for n = 0
  std::vector<std::pair<Integer, unsigned>> factors;
  bool certified = true;  // false if some factor is only a probable prime

  Integer value() const {
    if (sign == 0) return 0;
    Integer r = 1;
    for (const auto& [p, e] : factors) r *= ipow(p, e);
    return sign < 0 ? Integer(-r) : r;
  }
  bool has(const Integer& p) const {
    for (const auto& f : factors)
      if (f.first == p) return true;
    return false;
  }
  /// Compact form "2^5.3.71", "-2^10.3^3.5"; 1 for the empty product.
  std::string str() const {
    if (sign == 0) return "0";
    std::string s = sign < 0 ? "-" : "";
    if (factors.empty()) return s + "1";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ".";
      s += factors[i].first.str();
      if (factors[i].second > 1) s += "^" + std::to_string(factors[i].second);
    }
    return s;
  }
};

namespace detail {

inline Integer powm(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.backend().data(), b.backend().data(), e.backend().data(), m.backend().data());
  return r;
}

/// Miller-Rabin with the prime bases up to 41: deterministic below 3.3e24.
inline bool miller_rabin(const Integer& n) {
  if (n < 2) return false;
  static const unsigned bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned b : bases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while (mp::bit_test(d, 0) == false) {
    d >>= 1;
    ++s;
  }
  for (unsigned b : bases) {
    Integer x = powm(Integer(b), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline const Integer& deterministic_limit() {
  static const Integer limit("3317044064679887385961981");
  return limit;
}

/// Pollard rho with Brent's cycle detection; deterministic seeds.
inline Integer pollard_brent(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * mp::abs(Integer(x - y)) % n;
        }
        g = mp::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = mp::gcd(mp::abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split(const Integer& n, std::vector<Integer>& primes, bool& certified) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    if (n >= deterministic_limit()) certified = false;
    primes.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  split(d, primes, certified);
  split(Integer(n / d), primes, certified);
}

}  // namespace detail

inline Factorization factorize(const Integer& n) {
  Factorization f;
  if (n == 0) {
    f.sign = 0;
    return f;
  }
  f.sign = n < 0 ? -1 : 1;
  Integer m = mp::abs(n);
  auto push = [&](const Integer& p) {
    if (!f.factors.empty() && f.factors.back().first == p) ++f.factors.back().second;
    else f.factors.emplace_back(p, 1u);
  };
  static const Sieve small(1000000);
  for (std::uint32_t p : small.primes()) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.backend().data(), p)) {
      push(Integer(p));
      m /= p;
    }
    // Stop early once the cofactor is prime.
    if ((p == 997 || p == 9973 || p == 99991) && m > 1 && detail::miller_rabin(m)) break;
  }
  if (m == 1) return f;
  if (m < Integer(1000000) * 1000000 || (m < detail::deterministic_limit() && detail::miller_rabin(m))) {
    push(m);
    return f;
  }
  std::vector<Integer> big;
  detail::split(m, big, f.certified);
  std::sort(big.begin(), big.end());
  for (const auto& p : big) push(p);
  return f;
}

enum class Verdict { identified, ambiguous, none };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::identified: return "identified";
    case Verdict::ambiguous: return "ambiguous";
    default: return "none";
  }
}

struct RationalIdentification {
  Real value;
  Real radius;
  Integer den_bound;
  Verdict verdict = Verdict::none;
  std::optional<Rational> candidate;
  std::optional<Rational> rival;  // another fraction in the interval, if any
  Factorization numerator;
  Factorization denominator;
};

namespace detail {

/// The rational of smallest denominator in [lo, hi] (lo <= hi).
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  Integer fl = mp::numerator(lo) / mp::denominator(lo);  // floor, lo > 0
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational inner = simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
  return Rational(fl) + Rational(1) / inner;
}

inline Integer invert_mod(const Integer& a, const Integer& m) {
  Integer r;
  Integer aa = ((a % m) + m) % m;
  mpz_invert(r.backend().data(), aa.backend().data(), m.backend().data());
  return r;
}

/// Neighbours of p/q in the Farey sequence of order N (q <= N).
inline std::pair<Rational, Rational> farey_neighbours(const Rational& x, const Integer& N) {
  Integer p = mp::numerator(x), q = mp::denominator(x);
  Integer b0 = 1, d0 = 1;
  if (q > 1) {
    b0 = invert_mod(p, q);         // p b = 1 (mod q)
    d0 = q - b0;                   // p d = -1 (mod q)
    if (b0 == 0) b0 = q;
    if (d0 == 0) d0 = q;
  }
  Integer b = b0 + (N - b0) / q * q;
  Integer d = d0 + (N - d0) / q * q;
  Rational left(Integer((p * b - 1) / q), b);
  Rational right(Integer((p * d + 1) / q), d);
  return {left, right};
}

}  // namespace detail

/// Smallest-denominator rational in [value - radius, value + radius]. The
/// verdict is "identified" only when no other fraction with denominator at
/// most den_bound lies in the interval.
inline RationalIdentification identify_rational(const Real& value, const Real& radius, const Integer& den_bound) {
  if (radius < 0) throw DomainError("radius must be non-negative");
  if (den_bound < 1) throw DomainError("denominator bound must be at least 1");
  RationalIdentification r;
  r.value = value;
  r.radius = radius;
  r.den_bound = den_bound;
  Rational lo = to_rational(Real(value - radius)), hi = to_rational(Real(value + radius));
  Rational c = detail::simplest_between(lo, hi);
  if (mp::denominator(c) > den_bound) return r;
  r.candidate = c;
  r.numerator = factorize(mp::numerator(c));
  r.denominator = factorize(mp::denominator(c));
  auto [left, right] = detail::farey_neighbours(c, den_bound);
  if (left >= lo) r.rival = left;
  else if (right <= hi) r.rival = right;
  r.verdict = r.rival ? Verdict::ambiguous : Verdict::identified;
  return r;
}

enum class Side { numerator, denominator, absent };

inline const char* side_name(Side s) {
  switch (s) {
    case Side::numerator: return "numerator";
    case Side::denominator: return "denominator";
    default: return "absent";
  }
}

struct PredictionHit {
  Integer prime;
  Side expected;
  Side found;
  bool hit() const { return expected == found; }
};

/// Per predicted prime, the side of the identified ratio on which it occurs.
inline std::vector<PredictionHit> check_prediction(const RationalIdentification& r,
                                                   const std::vector<Integer>& numerator_primes,
                                                   const std::vector<Integer>& denominator_primes) {
  if (r.verdict != Verdict::identified || !r.candidate)
    throw DomainError("predictions need an identified rational");
  auto locate = [&](const Integer& p) {
    if (r.numerator.has(p)) return Side::numerator;
    if (r.denominator.has(p)) return Side::denominator;
    return Side::absent;
  };
  std::vector<PredictionHit> out;
  for (const auto& p : numerator_primes) out.push_back({p, Side::numerator, locate(p)});
  for (const auto& p : denominator_primes) out.push_back({p, Side::denominator, locate(p)});
  return out;
}

}  // namespace lcrit
