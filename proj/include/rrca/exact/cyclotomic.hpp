#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rrca/exact/rat.hpp"

namespace rrca {

// Element of the cyclotomic field Q(zeta_n), stored as the unique representative
// of degree < phi(n) modulo Phi_n. Conductor 1 is Q and mixes with any conductor.
class Cyc {
 public:
  Cyc() : n_(1), c_{Rat(0)} {}
  Cyc(int v) : n_(1), c_{Rat(v)} {}
  Cyc(long v) : n_(1), c_{Rat(v)} {}
  Cyc(const Rat& v) : n_(1), c_{v} {}

  // Reduces an arbitrary coefficient list (c[i] multiplies zeta^i) mod Phi_n.
  static Cyc from_coeffs(int n, const std::vector<Rat>& c);
  // zeta_n^k for any integer k.
  static Cyc zeta(int n, long k = 1);
  static Cyc parse(std::string_view text, int n);

  int conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;

  Cyc inverse() const;
  Cyc conj() const;
  // Field automorphism zeta -> zeta^j, gcd(j, n) = 1.
  Cyc galois(long j) const;
  // Embeds Q(zeta_n) into Q(zeta_target), n | target.
  Cyc lift(int target) const;

  std::string str() const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o) { return *this *= o.inverse(); }
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend Cyc operator-(const Cyc& a);
  friend bool operator==(const Cyc& a, const Cyc& b);

 private:
  Cyc(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
  static int common(const Cyc& a, const Cyc& b);
  Cyc widened(int n) const;

  int n_;
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyc& c);

inline bool is_zero(const Cyc& c) { return c.is_zero(); }
inline Cyc inverse(const Cyc& c) { return c.inverse(); }

Cyc pow(const Cyc& base, long exponent);

int euler_phi(int n);

}  // namespace rrca
