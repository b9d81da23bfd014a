#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>

#include "rrca/error.hpp"
#include "rrca/exact/scalar.hpp"

namespace rrca {

inline constexpr int kMaxVars = 24;

// Exponent vector with a cached total degree.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  static Monomial variable(int index, int power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  int operator[](int i) const { return e_[i]; }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(int i, int power) {
    if (i < 0 || i >= kMaxVars) throw MathError("variable index out of range");
    if (power < 0 || power > 255) throw MathError("exponent out of range");
    deg_ += power - e_[i];
    e_[i] = static_cast<std::uint8_t>(power);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = a.e_[i] + b.e_[i];
      if (s > 255) throw MathError("exponent out of range");
      r.e_[i] = static_cast<std::uint8_t>(s);
    }
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // o / this, assuming divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint8_t>(o.e_[i] - e_[i]);
    r.deg_ = o.deg_ - deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.deg_ = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  const std::array<std::uint8_t, kMaxVars>& exponents() const { return e_; }

 private:
  std::array<std::uint8_t, kMaxVars> e_;
  int deg_ = 0;
};

// a < b in lexicographic order with variable 0 the largest.
struct LexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents() < b.exponents(); }
};

// Degree first, ties broken lexicographically.
struct GrLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  }
};

// Sparse multivariate polynomial; the map iterates from the smallest monomial.
template <class Coef, class Order>
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Coef, Order>;

  SparsePoly() = default;
  SparsePoly(const Coef& c) {
    if (!zero(c)) terms_.emplace(Monomial(), c);
  }
  static SparsePoly term(const Coef& c, const Monomial& m) {
    SparsePoly p;
    if (!zero(c)) p.terms_.emplace(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Coef& leading_coeff() const { return terms_.rbegin()->second; }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  Coef constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Coef(0) : it->second;
  }
  Coef coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  void add_term(const Monomial& m, const Coef& c) {
    if (zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(const Coef& c, const Monomial& m = Monomial()) const {
    SparsePoly r;
    if (zero(c)) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  // Exact division; throws if b does not divide a.
  friend SparsePoly exact_quotient(const SparsePoly& a, const SparsePoly& b) {
    if (b.is_zero()) throw MathError("division by zero polynomial");
    SparsePoly rem = a, q;
    const Monomial& lb = b.leading_monomial();
    Coef inv = inverse(b.leading_coeff());
    while (!rem.is_zero()) {
      const Monomial& lr = rem.leading_monomial();
      if (!lb.divides(lr)) throw MathError("polynomial division is not exact");
      Monomial t = lb.quotient_of(lr);
      Coef f = rem.leading_coeff() * inv;
      q.add_term(t, f);
      rem -= b.scaled(f, t);
    }
    return q;
  }

 private:
  static bool zero(const Coef& c) { return detail::zero_adl(c); }

  Terms terms_;
};

}  // namespace rrca
