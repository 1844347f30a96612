#pragma once

// Minimal complex arithmetic over an arbitrary real type. std::complex is
// only specified for the builtin floating types, so MPFR reals need this.

#include <cmath>
#include <ostream>

namespace lcrit {

template <class R>
struct Complex {
  R re{0};
  R im{0};

  Complex() = default;
  Complex(R r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    R r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const R& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    R d = o.re * o.re + o.im * o.im;
    R r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const R& s) { return a *= s; }
  friend Complex operator*(const R& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
};

template <class R>
Complex<R> conj(const Complex<R>& z) {
  return {z.re, -z.im};
}

template <class R>
R norm(const Complex<R>& z) {
  return z.re * z.re + z.im * z.im;
}

template <class R>
R abs(const Complex<R>& z) {
  using std::hypot;
  return R(hypot(z.re, z.im));
}

template <class R>
R arg(const Complex<R>& z) {
  using std::atan2;
  return R(atan2(z.im, z.re));
}

template <class R>
Complex<R> exp(const Complex<R>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  R m = exp(z.re);
  return {R(m * cos(z.im)), R(m * sin(z.im))};
}

/// Principal branch.
template <class R>
Complex<R> log(const Complex<R>& z) {
  using std::log;
  return {R(log(abs(z))), arg(z)};
}

/// e^{i theta}
template <class R>
Complex<R> expi(const R& theta) {
  using std::cos;
  using std::sin;
  return {R(cos(theta)), R(sin(theta))};
}

template <class R>
Complex<R> cos(const Complex<R>& z) {
  // cos(x+iy) = cos x cosh y - i sin x sinh y
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {R(cos(z.re) * cosh(z.im)), R(-sin(z.re) * sinh(z.im))};
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Complex<R>& z) {
  return os << '(' << z.re << ',' << z.im << ')';
}

}  // namespace lcrit
