#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rrca/error.hpp"
#include "rrca/exact/rat.hpp"
#include "rrca/exact/scalar.hpp"

namespace rrca {

// Dense univariate polynomial over a field F; coeffs_[i] multiplies t^i.
// The zero polynomial has no coefficients and degree -1.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  UPoly(const F& c) {
    if (!detail::zero_adl(c)) coeffs_.push_back(c);
  }
  explicit UPoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly monomial(const F& c, int degree) {
    std::vector<F> v(degree + 1, F(0));
    v[degree] = c;
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<F>& coeffs() const { return coeffs_; }
  F coeff(int i) const { return (i >= 0 && i <= degree()) ? coeffs_[i] : F(0); }
  const F& leading() const { return coeffs_.back(); }

  F evaluate(const F& x) const {
    F acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    F inv = inverse(leading());
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = c * inv;
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) { return UPoly() - a; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<F> v(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(v));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw MathError("division by zero polynomial");
    UPoly r = a;
    std::vector<F> q(std::max(0, a.degree() - b.degree() + 1), F(0));
    F inv = inverse(b.leading());
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      F f = r.leading() * inv;
      q[shift] = f;
      for (int i = 0; i <= b.degree(); ++i) r.coeffs_[i + shift] = r.coeffs_[i + shift] - f * b.coeffs_[i];
      r.trim();
    }
    return {UPoly(std::move(q)), r};
  }

  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // Returns (g, s, t) with s*a + t*b = g, g monic.
  friend std::tuple<UPoly, UPoly, UPoly> xgcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b, s0 = UPoly(F(1)), s1, t0, t1 = UPoly(F(1));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::exchange(r1, r);
      s0 = std::exchange(s1, s0 - q * s1);
      t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    UPoly lc(inverse(r0.leading()));
    return {r0 * lc, s0 * lc, t0 * lc};
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::zero_adl(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

using UPolyQ = UPoly<Rat>;

// Cyclotomic polynomial Phi_n with integer coefficients.
const UPolyQ& cyclotomic_polynomial(int n);

}  // namespace rrca
