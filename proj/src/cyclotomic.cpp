#include "rrca/exact/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rrca/error.hpp"
#include "rrca/exact/parse.hpp"
#include "rrca/exact/upoly.hpp"

namespace rrca {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

const UPolyQ& cyclotomic_locked(int n, std::map<int, UPolyQ>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  UPolyQ p = UPolyQ::monomial(Rat(1), n) - UPolyQ(Rat(1));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divmod(p, cyclotomic_locked(d, cache)).first;
  return cache.emplace(n, p).first->second;
}

}  // namespace

const UPolyQ& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, UPolyQ> cache;
  if (n < 1) throw MathError("cyclotomic index must be positive");
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_locked(n, cache);
}

namespace {

struct CycloData {
  int n;
  int phi;
  // reduce[k - phi] = zeta^k written in the power basis, for phi <= k <= 2 phi - 2.
  std::vector<std::vector<Rat>> reduce;
};

const CycloData& data(int n) {
  static std::mutex mu;
  static std::map<int, CycloData> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  const UPolyQ& phi_poly = cyclotomic_polynomial(n);
  CycloData d{n, phi_poly.degree(), {}};
  std::vector<Rat> cur(d.phi, Rat(0));
  // zeta^phi = -sum_{i<phi} a_i zeta^i
  for (int i = 0; i < d.phi; ++i) cur[i] = -phi_poly.coeff(i);
  for (int k = d.phi; k <= std::max(d.phi, 2 * d.phi - 2); ++k) {
    d.reduce.push_back(cur);
    std::vector<Rat> next(d.phi, Rat(0));
    Rat top = cur[d.phi - 1];
    for (int i = d.phi - 1; i >= 1; --i) next[i] = cur[i - 1] - top * phi_poly.coeff(i);
    next[0] = -top * phi_poly.coeff(0);
    cur = std::move(next);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(d)).first->second;
}

std::vector<Rat> reduce_coeffs(const CycloData& d, std::vector<Rat> c) {
  if (static_cast<int>(c.size()) <= d.phi) {
    c.resize(d.phi, Rat(0));
    return c;
  }
  std::vector<Rat> out(c.begin(), c.begin() + d.phi);
  for (std::size_t k = d.phi; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    const auto& row = d.reduce[k - d.phi];
    for (int i = 0; i < d.phi; ++i)
      if (!row[i].is_zero()) out[i] += c[k] * row[i];
  }
  return out;
}

}  // namespace

Cyc Cyc::from_coeffs(int n, const std::vector<Rat>& c) {
  if (n < 1) throw MathError("conductor must be positive");
  const CycloData& d = data(n);
  // Fold exponents mod n first so long inputs stay cheap.
  std::vector<Rat> folded(std::min<std::size_t>(c.size(), n), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) folded[i % n] += c[i];
  if (static_cast<int>(folded.size()) > 2 * d.phi - 1) {
    // zeta^k for k >= 2 phi - 1 is reduced step by step.
    std::vector<Rat> out(d.phi, Rat(0));
    for (std::size_t k = 0; k < folded.size(); ++k) {
      if (folded[k].is_zero()) continue;
      Cyc z = zeta(n, static_cast<long>(k));
      for (int i = 0; i < d.phi; ++i) out[i] += folded[k] * z.c_[i];
    }
    return Cyc(n, std::move(out));
  }
  return Cyc(n, reduce_coeffs(d, std::move(folded)));
}

Cyc Cyc::zeta(int n, long k) {
  if (n < 1) throw MathError("conductor must be positive");
  const CycloData& d = data(n);
  long e = ((k % n) + n) % n;
  if (e < d.phi) {
    std::vector<Rat> c(d.phi, Rat(0));
    c[e] = Rat(1);
    return Cyc(n, std::move(c));
  }
  // Multiply zeta^(phi-1) by zeta repeatedly.
  std::vector<Rat> cur(d.phi, Rat(0));
  cur[d.phi - 1] = Rat(1);
  const UPolyQ& p = cyclotomic_polynomial(n);
  for (long step = d.phi - 1; step < e; ++step) {
    std::vector<Rat> next(d.phi, Rat(0));
    Rat top = cur[d.phi - 1];
    for (int i = d.phi - 1; i >= 1; --i) next[i] = cur[i - 1] - top * p.coeff(i);
    next[0] = -top * p.coeff(0);
    cur = std::move(next);
  }
  return Cyc(n, std::move(cur));
}

bool Cyc::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rat Cyc::rational_value() const {
  if (!is_rational()) throw MathError("value is not rational: " + str());
  return c_[0];
}

int Cyc::common(const Cyc& a, const Cyc& b) {
  if (a.n_ == b.n_) return a.n_;
  if (a.n_ == 1) return b.n_;
  if (b.n_ == 1) return a.n_;
  throw MathError("conductor mismatch: " + std::to_string(a.n_) + " vs " + std::to_string(b.n_));
}

Cyc Cyc::widened(int n) const {
  if (n == n_) return *this;
  std::vector<Rat> c(data(n).phi, Rat(0));
  c[0] = c_[0];
  return Cyc(n, std::move(c));
}

Cyc& Cyc::operator+=(const Cyc& o) {
  int n = common(*this, o);
  if (n_ != n) *this = widened(n);
  if (o.n_ == n) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    c_[0] += o.c_[0];
  }
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  int n = common(*this, o);
  if (n_ != n) *this = widened(n);
  if (o.n_ == n) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  } else {
    c_[0] -= o.c_[0];
  }
  return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  int n = Cyc::common(a, b);
  if (a.n_ == 1 || b.n_ == 1) {
    const Cyc& scalar = a.n_ == 1 ? a : b;
    const Cyc& vec = a.n_ == 1 ? b : a;
    Cyc r = vec;
    for (auto& c : r.c_) c *= scalar.c_[0];
    return r;
  }
  const CycloData& d = data(n);
  std::vector<Rat> prod(2 * d.phi - 1, Rat(0));
  for (int i = 0; i < d.phi; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < d.phi; ++j)
      if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return Cyc(n, reduce_coeffs(d, std::move(prod)));
}

Cyc& Cyc::operator*=(const Cyc& o) { return *this = *this * o; }

Cyc operator-(const Cyc& a) {
  Cyc r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const Cyc& a, const Cyc& b) {
  int n = Cyc::common(a, b);
  if (a.n_ == b.n_) return a.c_ == b.c_;
  const Cyc& wide = a.n_ == n ? a : b;
  const Cyc& narrow = a.n_ == n ? b : a;
  return wide.is_rational() && wide.c_[0] == narrow.c_[0];
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  if (n_ == 1 || is_rational()) {
    Cyc r = *this;
    r.c_[0] = c_[0].inverse();
    return r;
  }
  auto [g, s, t] = xgcd(UPolyQ(c_), cyclotomic_polynomial(n_));
  if (g.degree() != 0) throw MathError("non-invertible cyclotomic element");
  return from_coeffs(n_, s.coeffs());
}

Cyc Cyc::galois(long j) const {
  if (n_ == 1) return *this;
  if (std::gcd(j, static_cast<long>(n_)) != 1) throw MathError("galois exponent not coprime to conductor");
  std::vector<Rat> c(n_, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    long e = ((static_cast<long>(i) * j) % n_ + n_) % n_;
    c[e] += c_[i];
  }
  return from_coeffs(n_, c);
}

Cyc Cyc::conj() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }

Cyc Cyc::lift(int target) const {
  if (target == n_) return *this;
  if (target % n_ != 0) throw MathError("conductor mismatch: cannot lift " + std::to_string(n_) + " to " + std::to_string(target));
  if (n_ == 1) return widened(target);
  int step = target / n_;
  std::vector<Rat> c(target, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[(i * step) % target] += c_[i];
  return from_coeffs(target, c);
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) os << mag.str() << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

Cyc pow(const Cyc& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Cyc result(1), b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

Cyc Cyc::parse(std::string_view text, int n) { return parse_cyclotomic(text, n); }

}  // namespace rrca
