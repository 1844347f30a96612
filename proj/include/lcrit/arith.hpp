#pragma once

// Number types shared by every module: exact GMP integers and rationals,
// MPFR reals with a runtime-selected precision.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcrit {

namespace mp = boost::multiprecision;

using Integer = mp::mpz_int;
using Rational = mp::mpq_rational;
using Real = mp::mpfr_float;

/// Thrown when an operation's preconditions on its arguments are violated.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact arithmetic produced a value that contradicts an algebraic invariant
/// (for instance a non-integral tensor coefficient).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sets the MPFR default precision (decimal digits) for the lifetime of the
/// guard. The boost default precision is process-wide, so guards must not be
/// changed concurrently from several threads.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~ScopedPrecision() { Real::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

/// Copy of `value` rounded to `digits10` decimal digits of precision. Plain
/// copies keep the source precision, so precision changes go through here.
inline Real with_precision(const Real& value, unsigned digits10) {
  Real r;
  r.precision(digits10);
  mpfr_set(r.backend().data(), value.backend().data(), MPFR_RNDN);
  return r;
}

inline Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), exponent);
  return r;
}

inline Integer ipow(long base, unsigned long exponent) { return ipow(Integer(base), exponent); }

/// p^e for a possibly negative exponent is not an integer; callers check.
inline Integer ipow_checked(long base, long exponent) {
  if (exponent < 0) throw DomainError("negative exponent in integer power");
  return ipow(base, static_cast<unsigned long>(exponent));
}

inline Real to_real(const Integer& n) { return Real(n); }

inline Real to_real(const Rational& q) {
  return Real(mp::numerator(q)) / Real(mp::denominator(q));
}

/// Exact value of an MPFR number as a rational (MPFR values are dyadic).
inline Rational to_rational(const Real& x) {
  mpz_t m;
  mpz_init(m);
  mpfr_exp_t e = mpfr_get_z_2exp(m, x.backend().data());
  Integer mant;
  mpz_swap(mant.backend().data(), m);
  mpz_clear(m);
  if (e >= 0) return Rational(mant << static_cast<unsigned>(e));
  Integer den = Integer(1) << static_cast<unsigned>(-e);
  return Rational(mant, den);
}

inline Real pi_real() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

/// Parses a decimal integer literal with an optional sign; rejects anything
/// else (no exponents, no separators).
inline bool parse_integer(const std::string& token, Integer& out) {
  if (token.empty()) return false;
  std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (i == token.size()) return false;
  for (std::size_t k = i; k < token.size(); ++k)
    if (token[k] < '0' || token[k] > '9') return false;
  auto first = token.find_first_not_of('0', i);
  std::string digits = first == std::string::npos ? "0" : token.substr(first);
  out = Integer(digits);
  if (token[0] == '-') out = -out;
  return true;
}

inline std::string to_string(const Integer& n) { return n.str(); }

inline Rational parse_rational(const std::string& text) {
  // Accepts "3", "-3/2", "0.25".
  auto slash = text.find('/');
  Integer num, den;
  if (slash != std::string::npos) {
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den) ||
        den == 0)
      throw DomainError("cannot parse rational '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    if (!parse_integer(text, num)) throw DomainError("cannot parse rational '" + text + "'");
    return Rational(num);
  }
  std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
  bool neg = !whole.empty() && whole[0] == '-';
  if (whole.empty() || whole == "-" || whole == "+") whole += "0";
  Integer f;
  if (frac.empty() || !parse_integer(whole, num) || frac[0] == '-' || frac[0] == '+' || !parse_integer(frac, f))
    throw DomainError("cannot parse rational '" + text + "'");
  Integer scale = ipow(10L, frac.size());
  Integer total = mp::abs(num) * scale + f;
  return Rational(neg ? Integer(-total) : total, scale);
}

inline std::string rational_str(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

}  // namespace lcrit
