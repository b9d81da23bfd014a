#include "rrca/exact/ratfunc.hpp"

#include <ostream>

#include "rrca/error.hpp"

namespace rrca {

RatFunc::RatFunc(const UPolyQ& num, const UPolyQ& den) {
  if (den.is_zero()) throw MathError("division by zero");
  if (num.is_zero()) {
    den_ = UPolyQ(Rat(1));
    return;
  }
  UPolyQ g = gcd(num, den);
  num_ = divmod(num, g).first;
  den_ = divmod(den, g).first;
  Rat lc = den_.leading();
  num_ = num_ * UPolyQ(lc.inverse());
  den_ = den_.monic();
}

RatFunc::RatFunc(const LaurentQ& l) : den_(Rat(1)) {
  int shift = std::min(0, l.min_exponent());
  num_ = l.to_upoly(shift);
  if (shift < 0) *this = RatFunc(num_, UPolyQ::monomial(Rat(1), -shift));
}

std::optional<LaurentQ> RatFunc::to_laurent() const {
  int d = den_.degree();
  for (int i = 0; i < d; ++i)
    if (!den_.coeff(i).is_zero()) return std::nullopt;
  return LaurentQ::from_upoly(num_, -d);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RatFunc::str() const {
  if (auto l = to_laurent()) return l->str();
  return "(" + LaurentQ::from_upoly(num_).str() + ")/(" + LaurentQ::from_upoly(den_).str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

}  // namespace rrca
