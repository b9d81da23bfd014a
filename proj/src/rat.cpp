#include "rrca/exact/rat.hpp"

#include <cctype>
#include <ostream>

#include "rrca/error.hpp"

namespace rrca {

Rat::Rat(long num, long den) {
  if (den == 0) throw MathError("division by zero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw MathError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  return Rat(mpq_class(1 / v_));
}

Rat Rat::parse(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    if (i == start) throw ParseError("expected digit", i);
  };
  std::string num, den;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    if (text[i] == '-') num += '-';
    ++i;
  }
  digits(num);
  if (i < text.size() && text[i] == '/') {
    ++i;
    digits(den);
  }
  if (i != text.size()) throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
  mpq_class v;
  v.get_num() = mpz_class(num);
  v.get_den() = den.empty() ? mpz_class(1) : mpz_class(den);
  if (v.get_den() == 0) throw ParseError("zero denominator", text.size());
  return Rat(v);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Rat result(1), b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace rrca
