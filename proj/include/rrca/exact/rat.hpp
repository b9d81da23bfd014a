#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rrca {

// Arbitrary precision rational number, always in lowest terms.
class Rat {
 public:
  Rat() = default;
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long long n) : v_(static_cast<long>(n)) {}
  Rat(long num, long den);
  explicit Rat(const mpz_class& n) : v_(n) {}
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rat parse(std::string_view text);

  const mpq_class& get() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rat inverse() const;
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  std::string str() const { return v_.get_str(); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline Rat inverse(const Rat& r) { return r.inverse(); }

Rat pow(const Rat& base, long exponent);

}  // namespace rrca
