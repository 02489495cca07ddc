#include "galrep/polynomial.hpp"

#include <algorithm>

#include "galrep/matrix.hpp"

namespace galrep {

CycPoly::CycPoly(unsigned order, std::vector<CycQ> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(CycQ::zero(order_));
  for (const CycQ& x : c_)
    if (x.order() != order_) throw std::invalid_argument("CycPoly: mixed cyclotomic orders");
  trim();
}

CycPoly CycPoly::constant(const CycQ& a) { return CycPoly(a.order(), {a}); }

CycPoly CycPoly::x(unsigned order) {
  return CycPoly(order, {CycQ::zero(order), CycQ::one(order)});
}

int CycPoly::degree() const {
  for (size_t i = c_.size(); i-- > 0;)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

CycQ CycPoly::coeff(size_t i) const {
  if (i < c_.size()) return c_[i];
  return CycQ::zero(order_);
}

CycQ CycPoly::leading() const {
  int d = degree();
  return d < 0 ? CycQ::zero(order_) : c_[static_cast<size_t>(d)];
}

void CycPoly::trim() {
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

CycPoly CycPoly::operator-() const {
  CycPoly r = *this;
  for (CycQ& x : r.c_) x = -x;
  return r;
}

CycPoly operator+(const CycPoly& a, const CycPoly& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("CycPoly: mixed cyclotomic orders");
  std::vector<CycQ> c(std::max(a.c_.size(), b.c_.size()), CycQ::zero(a.order_));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return CycPoly(a.order_, std::move(c));
}

CycPoly operator-(const CycPoly& a, const CycPoly& b) { return a + (-b); }

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("CycPoly: mixed cyclotomic orders");
  if (a.is_zero() || b.is_zero()) return CycPoly::zero(a.order_);
  std::vector<CycQ> c(a.c_.size() + b.c_.size() - 1, CycQ::zero(a.order_));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return CycPoly(a.order_, std::move(c));
}

bool operator==(const CycPoly& a, const CycPoly& b) {
  if (a.order_ != b.order_) return false;
  int da = a.degree(), db = b.degree();
  if (da != db) return false;
  for (int i = 0; i <= da; ++i)
    if (a.c_[static_cast<size_t>(i)] != b.c_[static_cast<size_t>(i)]) return false;
  return true;
}

CycPoly CycPoly::scaled(const CycQ& s) const {
  CycPoly r = *this;
  for (CycQ& x : r.c_) x *= s;
  r.trim();
  return r;
}

CycPoly CycPoly::monic() const {
  if (is_zero()) throw std::domain_error("CycPoly::monic: zero polynomial");
  return scaled(leading().inverse());
}

CycQ CycPoly::eval(const CycQ& at) const {
  CycQ acc = CycQ::zero(order_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

std::pair<CycPoly, CycPoly> CycPoly::divmod(const CycPoly& a, const CycPoly& b) {
  if (b.is_zero()) throw std::domain_error("CycPoly: division by zero polynomial");
  int db = b.degree();
  CycQ lead_inv = b.leading().inverse();
  std::vector<CycQ> rem = a.c_;
  int da = a.degree();
  if (da < db) return {CycPoly::zero(a.order_), a};
  std::vector<CycQ> quot(static_cast<size_t>(da - db) + 1, CycQ::zero(a.order_));
  for (int i = da; i >= db; --i) {
    CycQ c = rem[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    CycQ s = c * lead_inv;
    quot[static_cast<size_t>(i - db)] = s;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(i - db + j)] -= s * b.c_[static_cast<size_t>(j)];
  }
  return {CycPoly(a.order_, std::move(quot)), CycPoly(a.order_, std::move(rem))};
}

CycPoly CycPoly::gcd(CycPoly a, CycPoly b) {
  while (!b.is_zero()) {
    CycPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

CycPoly CycPoly::pow_mod(const CycPoly& base, const Int& exp, const CycPoly& modulus) {
  if (exp < 0) throw std::invalid_argument("CycPoly::pow_mod: negative exponent");
  CycPoly acc = CycPoly::constant(CycQ::one(base.order()));
  acc = divmod(acc, modulus).second;
  CycPoly b = divmod(base, modulus).second;
  Int e = exp;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = divmod(acc * b, modulus).second;
    e >>= 1;
    if (e > 0) b = divmod(b * b, modulus).second;
  }
  return acc;
}

CharPoly::CharPoly(CycPoly p) : poly_(std::move(p)) {
  if (poly_.degree() < 0 || !poly_.leading().is_one())
    throw std::invalid_argument("CharPoly: polynomial must be monic");
}

CycQ CharPoly::elementary_symmetric(unsigned i) const {
  unsigned n = degree();
  if (i == 0) return CycQ::one(order());
  if (i > n) return CycQ::zero(order());
  CycQ a = poly_.coeff(n - i);
  return (i % 2 == 0) ? a : -a;
}

CharPoly power_charpoly(const CharPoly& p, const Int& K) {
  if (K <= 0) throw std::invalid_argument("power_charpoly: K must be positive");
  unsigned n = p.degree();
  unsigned N = p.order();
  if (n == 0) return p;
  if (K == 1) return p;
  CycPoly r = CycPoly::pow_mod(CycPoly::x(N), K, p.poly());
  // Multiplication-by-r operator on the basis 1, x, ..., x^{n-1} of the
  // quotient ring.
  Matrix mult(n, N);
  CycPoly col = r;
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) mult.at(i, j) = col.coeff(i);
    if (j + 1 < n) col = CycPoly::divmod(col * CycPoly::x(N), p.poly()).second;
  }
  return char_poly(mult);
}

}  // namespace galrep
