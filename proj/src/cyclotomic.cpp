#include "galrep/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace galrep {

unsigned euler_phi(unsigned n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials; divisor monic. Ascending coeffs.
std::vector<Int> exact_div(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> rem = num;
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (size_t i = quot.size(); i-- > 0;) {
    Int c = rem[i + den.size() - 1];
    quot[i] = c;
    if (c != 0) {
      for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
  }
  for (const Int& r : rem)
    if (r != 0) throw std::logic_error("cyclotomic: inexact division");
  return quot;
}

std::vector<Int> compute_cyclotomic(unsigned n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<Int> poly(n + 1, Int(0));
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = exact_div(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::map<unsigned, std::vector<Int>> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Int> value = n == 1 ? std::vector<Int>{Int(-1), Int(1)} : compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(n, std::move(value)).first->second;
}

CycQ CycQ::zero(unsigned order) {
  if (order == 0) throw std::invalid_argument("CycQ: order must be positive");
  return CycQ(order, std::vector<Rat>(euler_phi(order), Rat(0)));
}

CycQ CycQ::one(unsigned order) { return from_rational(Rat(1), order); }

CycQ CycQ::from_rational(const Rat& r, unsigned order) {
  CycQ z = zero(order);
  z.c_[0] = r;
  z.c_[0].canonicalize();
  return z;
}

CycQ CycQ::zeta(unsigned order) {
  std::vector<Rat> raw(2, Rat(0));
  raw[1] = 1;
  return reduce(raw, order);
}

CycQ CycQ::reduce(const std::vector<Rat>& raw, unsigned order) {
  if (order == 0) throw std::invalid_argument("cyclo_reduce: order must be positive");
  const std::vector<Int>& phi_poly = cyclotomic_polynomial(order);
  const size_t deg = phi_poly.size() - 1;  // phi(order)
  std::vector<Rat> rem = raw;
  if (rem.size() < deg) rem.resize(deg, Rat(0));
  // Remainder modulo the monic Phi_N.
  for (size_t i = rem.size(); i-- > deg;) {
    Rat c = rem[i];
    if (c != 0) {
      rem[i] = 0;
      for (size_t j = 0; j < deg; ++j) rem[i - deg + j] -= c * Rat(phi_poly[j]);
    }
  }
  rem.resize(deg);
  for (Rat& r : rem) r.canonicalize();
  return CycQ(order, std::move(rem));
}

bool CycQ::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool CycQ::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& r) { return r == 0; });
}

bool CycQ::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& r) { return r == 0; });
}

Rat CycQ::as_rational() const {
  if (!is_rational()) throw std::domain_error("CycQ: element is not rational");
  return c_[0];
}

CycQ CycQ::promoted(unsigned new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw std::invalid_argument("CycQ::promoted: target order must be a multiple");
  unsigned step = new_order / order_;
  std::vector<Rat> raw(static_cast<size_t>(c_.size() - 1) * step + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  return reduce(raw, new_order);
}

void CycQ::check_same_order(const CycQ& o) const {
  if (order_ != o.order_) throw std::invalid_argument("CycQ: mismatched cyclotomic orders");
}

CycQ CycQ::operator-() const {
  CycQ r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

CycQ& CycQ::operator+=(const CycQ& o) {
  check_same_order(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycQ& CycQ::operator-=(const CycQ& o) {
  check_same_order(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycQ& CycQ::operator*=(const CycQ& o) {
  check_same_order(o);
  std::vector<Rat> prod(2 * c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
  }
  *this = reduce(prod, order_);
  return *this;
}

CycQ& CycQ::operator/=(const CycQ& o) { return *this *= o.inverse(); }

bool operator==(const CycQ& a, const CycQ& b) {
  return a.order_ == b.order_ && a.c_ == b.c_;
}

CycQ operator*(const Rat& s, const CycQ& a) {
  CycQ r = a;
  std::vector<Rat> c = r.coeffs();
  for (Rat& x : c) x *= s;
  return CycQ::reduce(c, a.order());
}

namespace {

// Polynomial arithmetic over Q for the extended Euclid below. Ascending coeffs.
using QP = std::vector<Rat>;

int qp_deg(const QP& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

QP qp_sub_scaled(const QP& a, const QP& b, const Rat& s, size_t shift) {
  QP r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift, Rat(0));
  for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= s * b[i];
  return r;
}

// a = q*b + r with deg r < deg b.
std::pair<QP, QP> qp_divmod(QP a, const QP& b) {
  int db = qp_deg(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  QP q(std::max<size_t>(a.size(), 1), Rat(0));
  int da = qp_deg(a);
  while (da >= db) {
    Rat s = a[da] / b[db];
    q[da - db] += s;
    a = qp_sub_scaled(a, b, s, da - db);
    da = qp_deg(a);
  }
  return {q, a};
}

}  // namespace

CycQ CycQ::inverse() const {
  if (is_zero()) throw std::domain_error("CycQ: division by zero");
  if (is_rational()) return from_rational(Rat(1) / c_[0], order_);
  // Extended Euclid for gcd(a, Phi_N) = 1 in Q[x]: find u with u*a = 1 mod Phi_N.
  const std::vector<Int>& phi_poly = cyclotomic_polynomial(order_);
  QP r0(phi_poly.size());
  for (size_t i = 0; i < phi_poly.size(); ++i) r0[i] = Rat(phi_poly[i]);
  QP r1 = c_;
  QP u0{Rat(0)}, u1{Rat(1)};
  while (qp_deg(r1) > 0) {
    auto [q, r2] = qp_divmod(r0, r1);
    // u2 = u0 - q*u1
    QP qu1(q.size() + u1.size() - 1, Rat(0));
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < u1.size(); ++j) qu1[i + j] += q[i] * u1[j];
    QP u2 = u0;
    if (u2.size() < qu1.size()) u2.resize(qu1.size(), Rat(0));
    for (size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  int d = qp_deg(r1);
  if (d < 0) throw std::logic_error("CycQ::inverse: zero gcd for nonzero element");
  Rat lead = r1[0];
  for (Rat& x : u1) x /= lead;
  return reduce(u1, order_);
}

CycQ CycQ::pow(const Int& k) const {
  if (k < 0) return inverse().pow(-k);
  CycQ base = *this;
  CycQ acc = one(order_);
  Int e = k;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

std::string CycQ::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i >= 1) os << "*z" << order_ << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::optional<unsigned> root_of_unity_order(const CycQ& a) {
  if (a.is_zero()) throw std::domain_error("root_of_unity_order: zero input");
  unsigned n = a.order();
  // Roots of unity in Q(zeta_N) have order dividing N (N even) or 2N (N odd).
  unsigned cap = (n % 2 == 0) ? n : 2 * n;
  if (!(a.pow(cap).is_one())) return std::nullopt;
  for (unsigned k = 1; k <= cap; ++k) {
    if (cap % k == 0 && a.pow(k).is_one()) return k;
  }
  return std::nullopt;  // unreachable
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos)
    throw std::invalid_argument("decimal literals are not accepted: " + s);
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
          ((ch == '-' || ch == '+') && (i == 0 || s[i - 1] == '/'))))
      throw std::invalid_argument("malformed rational literal: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace galrep
