#pragma once

// FieldScalar: an element of Q(i, sqrt2), stored as
//
//   (re_rat + im_rat*i) + (re_rad + im_rad*i) * sqrt2
//
// with all four coordinates exact rationals.  This field contains every
// scalar the verification battery touches: the imaginary unit of the Pauli
// matrices, the 1/sqrt2 normalizations of xi and W, and the coordinates of
// all special points.  Arithmetic is closed and equality is decidable, so
// every matrix identity downstream is checked exactly, with no tolerance.

#include "magic4/rationals.hpp"

#include <complex>
#include <stdexcept>
#include <string>

namespace magic4 {

struct FieldScalar {
  Rat re_rat{};  // rational part, real
  Rat im_rat{};  // rational part, imaginary
  Rat re_rad{};  // sqrt2 part, real
  Rat im_rad{};  // sqrt2 part, imaginary

  FieldScalar() = default;
  FieldScalar(long long n) : re_rat(rat(n)) {}
  explicit FieldScalar(Rat r) : re_rat(std::move(r)) {}
  FieldScalar(Rat a, Rat b, Rat c, Rat d)
      : re_rat(std::move(a)), im_rat(std::move(b)), re_rad(std::move(c)), im_rad(std::move(d)) {}

  static FieldScalar zero() { return FieldScalar(); }
  static FieldScalar one() { return FieldScalar(1); }
  static FieldScalar i() { return FieldScalar(Rat(), rat(1), Rat(), Rat()); }
  static FieldScalar sqrt2() { return FieldScalar(Rat(), Rat(), rat(1), Rat()); }
  // 1/sqrt2 = sqrt2/2
  static FieldScalar inv_sqrt2() { return FieldScalar(Rat(), Rat(), rat(1, 2), Rat()); }

  bool is_zero() const {
    return re_rat.numerator() == 0 && im_rat.numerator() == 0 && re_rad.numerator() == 0 &&
           im_rad.numerator() == 0;
  }
  bool is_real() const { return im_rat.numerator() == 0 && im_rad.numerator() == 0; }
  bool is_rational() const {
    return im_rat.numerator() == 0 && re_rad.numerator() == 0 && im_rad.numerator() == 0;
  }

  friend bool operator==(const FieldScalar& x, const FieldScalar& y) {
    return x.re_rat == y.re_rat && x.im_rat == y.im_rat && x.re_rad == y.re_rad &&
           x.im_rad == y.im_rad;
  }
  friend bool operator!=(const FieldScalar& x, const FieldScalar& y) { return !(x == y); }

  FieldScalar& operator+=(const FieldScalar& o) {
    re_rat += o.re_rat;
    im_rat += o.im_rat;
    re_rad += o.re_rad;
    im_rad += o.im_rad;
    return *this;
  }
  FieldScalar& operator-=(const FieldScalar& o) {
    re_rat -= o.re_rat;
    im_rat -= o.im_rat;
    re_rad -= o.re_rad;
    im_rad -= o.im_rad;
    return *this;
  }

  friend FieldScalar operator+(FieldScalar x, const FieldScalar& y) { return x += y; }
  friend FieldScalar operator-(FieldScalar x, const FieldScalar& y) { return x -= y; }
  friend FieldScalar operator-(const FieldScalar& x) {
    return FieldScalar(-x.re_rat, -x.im_rat, -x.re_rad, -x.im_rad);
  }

  // (A + B*sqrt2)(C + D*sqrt2) = (AC + 2BD) + (AD + BC)*sqrt2 with A,B,C,D
  // Gaussian rationals.
  friend FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
    // Gaussian products: (a+bi)(c+di) = (ac-bd) + (ad+bc)i
    auto gre = [](const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
      return a * c - b * d;
    };
    auto gim = [](const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
      return a * d + b * c;
    };
    const Rat &a = x.re_rat, &b = x.im_rat, &p = x.re_rad, &q = x.im_rad;
    const Rat &c = y.re_rat, &d = y.im_rat, &r = y.re_rad, &s = y.im_rad;
    Rat two = rat(2);
    return FieldScalar(gre(a, b, c, d) + two * gre(p, q, r, s),
                       gim(a, b, c, d) + two * gim(p, q, r, s),
                       gre(a, b, r, s) + gre(p, q, c, d),
                       gim(a, b, r, s) + gim(p, q, c, d));
  }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

  // Complex conjugation: i -> -i, sqrt2 fixed.
  FieldScalar conj() const { return FieldScalar(re_rat, -im_rat, re_rad, -im_rad); }

  // Inverse by two norm-form descents: first (A+B*sqrt2)(A-B*sqrt2) = A^2-2B^2
  // lands in Q(i), then the Gaussian norm lands in Q.  Division by zero is a
  // contract violation.
  FieldScalar inverse() const {
    if (is_zero()) throw std::domain_error("FieldScalar: inverse of zero");
    const Rat &a = re_rat, &b = im_rat, &p = re_rad, &q = im_rad;
    Rat two = rat(2);
    // n = A^2 - 2B^2 in Q(i), written n = nr + ni*i
    Rat nr = a * a - b * b - two * (p * p - q * q);
    Rat ni = two * (a * b - two * p * q);
    // 1/n = (nr - ni*i) / (nr^2 + ni^2)
    Rat den = nr * nr + ni * ni;
    Rat inr = nr / den, ini = -ni / den;
    // 1/z = conj-radical(z) * (1/n), conj-radical(z) = A - B*sqrt2
    FieldScalar cr(a, b, -p, -q);
    FieldScalar invn(inr, ini, Rat(), Rat());
    return cr * invn;
  }

  friend FieldScalar operator/(const FieldScalar& x, const FieldScalar& y) {
    return x * y.inverse();
  }

  std::complex<double> to_complex() const {
    static const double s2 = 1.4142135623730950488;
    return {to_double(re_rat) + s2 * to_double(re_rad),
            to_double(im_rat) + s2 * to_double(im_rad)};
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    auto term = [&out](const Rat& c, const char* sym) {
      if (c.numerator() == 0) return;
      std::string t = to_string(c);
      if (!out.empty() && t[0] != '-') out += "+";
      out += t;
      out += sym;
    };
    term(re_rat, "");
    term(im_rat, "i");
    term(re_rad, "r2");
    term(im_rad, "ir2");
    return out;
  }
};

inline FieldScalar conj(const FieldScalar& x) { return x.conj(); }

}  // namespace magic4
