#pragma once

// Polynomial functions on the unit 3-sphere in variables a1..a4, with exact
// Q(i,sqrt2) coefficients.  Working modulo the sphere relation
//
//   a4^2 = 1 - a1^2 - a2^2 - a3^2
//
// every element has a unique normal form in which a4 appears to degree at
// most 1, so equality of functions is equality of normal forms.  The choice
// of eliminated variable is a convention; eliminating the last variable by
// this single principal relation is confluent.

#include "magic4/field.hpp"
#include "magic4/qmatrix.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace magic4 {

using Monomial = std::array<uint8_t, 4>;

class SpherePoly {
 public:
  SpherePoly() = default;
  explicit SpherePoly(FieldScalar c) {
    if (!c.is_zero()) coeff_[{0, 0, 0, 0}] = std::move(c);
  }
  static SpherePoly constant(FieldScalar c) { return SpherePoly(std::move(c)); }
  static SpherePoly one() { return SpherePoly(FieldScalar::one()); }
  // a_k, 1-based
  static SpherePoly variable(int k) {
    SpherePoly p;
    Monomial m{0, 0, 0, 0};
    m[k - 1] = 1;
    p.coeff_[m] = FieldScalar::one();
    return p;
  }
  static SpherePoly monomial(Monomial m, FieldScalar c) {
    SpherePoly p;
    if (!c.is_zero()) {
      p.coeff_[m] = std::move(c);
      p.reduce();
    }
    return p;
  }

  bool is_zero() const { return coeff_.empty(); }
  const std::map<Monomial, FieldScalar>& terms() const { return coeff_; }

  friend bool operator==(const SpherePoly& a, const SpherePoly& b) {
    return a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const SpherePoly& a, const SpherePoly& b) { return !(a == b); }

  SpherePoly& operator+=(const SpherePoly& o) {
    for (const auto& [m, c] : o.coeff_) add_term(m, c);
    return *this;
  }
  SpherePoly& operator-=(const SpherePoly& o) {
    for (const auto& [m, c] : o.coeff_) add_term(m, -c);
    return *this;
  }
  friend SpherePoly operator+(SpherePoly a, const SpherePoly& b) { return a += b; }
  friend SpherePoly operator-(SpherePoly a, const SpherePoly& b) { return a -= b; }
  friend SpherePoly operator-(const SpherePoly& a) {
    SpherePoly r;
    for (const auto& [m, c] : a.coeff_) r.coeff_[m] = -c;
    return r;
  }
  friend SpherePoly operator*(const SpherePoly& a, const SpherePoly& b) {
    SpherePoly r;
    for (const auto& [ma, ca] : a.coeff_)
      for (const auto& [mb, cb] : b.coeff_) {
        Monomial m;
        for (int k = 0; k < 4; ++k) m[k] = uint8_t(ma[k] + mb[k]);
        r.add_term(m, ca * cb);
      }
    r.reduce();
    return r;
  }
  friend SpherePoly operator*(const FieldScalar& s, const SpherePoly& a) {
    SpherePoly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.coeff_) {
      FieldScalar v = s * c;
      if (!v.is_zero()) r.coeff_[m] = std::move(v);
    }
    return r;
  }

  SpherePoly conj() const {
    SpherePoly r;
    for (const auto& [m, c] : coeff_) r.coeff_[m] = c.conj();
    return r;
  }

  // Every monomial of even total degree: the function descends to RP^3.
  bool descends_to_rp3() const {
    for (const auto& [m, c] : coeff_)
      if ((m[0] + m[1] + m[2] + m[3]) % 2 != 0) return false;
    return true;
  }
  bool all_odd_degree() const {
    for (const auto& [m, c] : coeff_)
      if ((m[0] + m[1] + m[2] + m[3]) % 2 == 0) return false;
    return true;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : coeff_) d = std::max(d, m[0] + m[1] + m[2] + m[3]);
    return d;
  }

  // Formal partial derivative w.r.t. a_k (1-based).  Any polynomial
  // representative gives the same 1-form once pulled back to the sphere.
  SpherePoly partial(int k) const {
    SpherePoly r;
    for (const auto& [m, c] : coeff_) {
      if (m[k - 1] == 0) continue;
      Monomial d = m;
      d[k - 1] -= 1;
      r.add_term(d, FieldScalar((long long)m[k - 1]) * c);
    }
    return r;
  }

  // Substitute a_k -> sum_l lin[k-1][l-1] * a_l, then renormalize.
  SpherePoly substitute_linear(const std::array<std::array<FieldScalar, 4>, 4>& lin) const {
    std::array<SpherePoly, 4> forms;
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l)
        if (!lin[k][l].is_zero()) forms[k] += lin[k][l] * variable(l + 1);
    SpherePoly out;
    for (const auto& [m, c] : coeff_) {
      SpherePoly term(c);
      for (int k = 0; k < 4; ++k)
        for (int e = 0; e < m[k]; ++e) term = term * forms[k];
      out += term;
    }
    out.reduce();
    return out;
  }

  FieldScalar eval(const std::array<FieldScalar, 4>& a) const {
    FieldScalar v;
    for (const auto& [m, c] : coeff_) {
      FieldScalar t = c;
      for (int k = 0; k < 4; ++k)
        for (int e = 0; e < m[k]; ++e) t *= a[k];
      v += t;
    }
    return v;
  }

  std::string str() const {
    if (coeff_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : coeff_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      static const char* names[4] = {"a1", "a2", "a3", "a4"};
      for (int k = 0; k < 4; ++k)
        for (int e = 0; e < m[k]; ++e) out += std::string("*") + names[k];
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto it = coeff_.find(m);
    if (it == coeff_.end()) {
      coeff_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) coeff_.erase(it);
    }
  }

  // Rewrite a4^2 -> 1 - a1^2 - a2^2 - a3^2 until a4-degree <= 1 everywhere.
  void reduce() {
    for (;;) {
      auto it = coeff_.begin();
      for (; it != coeff_.end(); ++it)
        if (it->first[3] >= 2) break;
      if (it == coeff_.end()) return;
      Monomial m = it->first;
      FieldScalar c = it->second;
      coeff_.erase(it);
      Monomial base = m;
      base[3] -= 2;
      add_term(base, c);
      for (int k = 0; k < 3; ++k) {
        Monomial sq = base;
        sq[k] += 2;
        add_term(sq, -c);
      }
    }
  }

  std::map<Monomial, FieldScalar> coeff_;
};

// f_{i,j}(a) = a_i a_j, the coordinate functions of the RP^3 model.
inline SpherePoly f_poly(int i, int j) {
  Monomial m{0, 0, 0, 0};
  m[i - 1] += 1;
  m[j - 1] += 1;
  return SpherePoly::monomial(m, FieldScalar::one());
}

}  // namespace magic4
