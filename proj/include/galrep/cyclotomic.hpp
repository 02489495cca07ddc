#ifndef GALREP_CYCLOTOMIC_HPP
#define GALREP_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galrep {

using Int = mpz_class;
using Rat = mpq_class;

unsigned euler_phi(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial, ascending, monic.
const std::vector<Int>& cyclotomic_polynomial(unsigned n);

/*
 * An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1},
 * reduced modulo Phi_N. The representation is the unique normal form, so
 * equality is coefficient comparison. All arithmetic is exact.
 */
class CycQ {
 public:
  CycQ() : order_(1), c_(1, Rat(0)) {}

  static CycQ zero(unsigned order);
  static CycQ one(unsigned order);
  static CycQ from_rational(const Rat& r, unsigned order = 1);
  /// The generator zeta_N itself.
  static CycQ zeta(unsigned order);
  /// Reduce an arbitrary polynomial in zeta_N (ascending coefficients) mod Phi_N.
  static CycQ reduce(const std::vector<Rat>& raw, unsigned order);

  unsigned order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws if the element is not rational.
  Rat as_rational() const;

  /// Re-express in Q(zeta_L) for N | L.
  CycQ promoted(unsigned new_order) const;

  CycQ operator-() const;
  CycQ& operator+=(const CycQ& o);
  CycQ& operator-=(const CycQ& o);
  CycQ& operator*=(const CycQ& o);
  CycQ& operator/=(const CycQ& o);

  friend CycQ operator+(CycQ a, const CycQ& b) { return a += b; }
  friend CycQ operator-(CycQ a, const CycQ& b) { return a -= b; }
  friend CycQ operator*(CycQ a, const CycQ& b) { return a *= b; }
  friend CycQ operator/(CycQ a, const CycQ& b) { return a /= b; }

  friend bool operator==(const CycQ& a, const CycQ& b);
  friend bool operator!=(const CycQ& a, const CycQ& b) { return !(a == b); }

  CycQ inverse() const;
  /// k may be negative; the element must be invertible in that case.
  CycQ pow(const Int& k) const;

  std::string str() const;

 private:
  CycQ(unsigned order, std::vector<Rat> c) : order_(order), c_(std::move(c)) {}
  void check_same_order(const CycQ& o) const;

  unsigned order_;
  std::vector<Rat> c_;  // length phi(order_)
};

CycQ operator*(const Rat& s, const CycQ& a);

/// Multiplicative order if a is a root of unity, nullopt otherwise.
/// Throws on zero input.
std::optional<unsigned> root_of_unity_order(const CycQ& a);

/// Parse an exact rational from "p/q" or "p". Decimal literals are rejected.
Rat parse_rational(const std::string& s);

}  // namespace galrep

#endif
