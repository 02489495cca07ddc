#ifndef GALREP_POLYNOMIAL_HPP
#define GALREP_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "galrep/cyclotomic.hpp"

namespace galrep {

/// Dense univariate polynomial over Q(zeta_N), ascending coefficients.
class CycPoly {
 public:
  explicit CycPoly(unsigned order) : order_(order), c_{CycQ::zero(order)} {}
  CycPoly(unsigned order, std::vector<CycQ> coeffs);

  static CycPoly zero(unsigned order) { return CycPoly(order); }
  static CycPoly constant(const CycQ& a);
  /// The monomial x.
  static CycPoly x(unsigned order);

  unsigned order() const { return order_; }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  const std::vector<CycQ>& coeffs() const { return c_; }
  /// Coefficient of x^i; zero (of the right order) beyond the degree.
  CycQ coeff(size_t i) const;
  CycQ leading() const;

  CycPoly operator-() const;
  friend CycPoly operator+(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator-(const CycPoly& a, const CycPoly& b);
  friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
  friend bool operator==(const CycPoly& a, const CycPoly& b);
  friend bool operator!=(const CycPoly& a, const CycPoly& b) { return !(a == b); }

  CycPoly scaled(const CycQ& s) const;
  CycPoly monic() const;
  CycQ eval(const CycQ& at) const;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<CycPoly, CycPoly> divmod(const CycPoly& a, const CycPoly& b);
  static CycPoly gcd(CycPoly a, CycPoly b);  // monic
  /// base^exp mod modulus, repeated squaring; exp >= 0.
  static CycPoly pow_mod(const CycPoly& base, const Int& exp, const CycPoly& modulus);

 private:
  void trim();
  unsigned order_;
  std::vector<CycQ> c_;  // never empty
};

/// Monic characteristic polynomial x^n + a_{n-1}x^{n-1} + ... + a_0.
class CharPoly {
 public:
  /// Checks monicity.
  explicit CharPoly(CycPoly p);

  unsigned degree() const { return static_cast<unsigned>(poly_.degree()); }
  unsigned order() const { return poly_.order(); }
  const CycPoly& poly() const { return poly_; }
  CycQ coeff(size_t i) const { return poly_.coeff(i); }

  /// e_i = (-1)^i a_{n-i}; the trace of the i-th exterior power. e_0 = 1,
  /// e_i = 0 for i > n.
  CycQ elementary_symmetric(unsigned i) const;
  CycQ trace() const { return elementary_symmetric(1); }
  CycQ det() const { return elementary_symmetric(degree()); }

  friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.poly_ == b.poly_; }
  friend bool operator!=(const CharPoly& a, const CharPoly& b) { return !(a == b); }

 private:
  CycPoly poly_;
};

/// Characteristic polynomial whose roots are the K-th powers of the roots of p,
/// with multiplicity. Computed as the characteristic polynomial of the
/// multiplication-by-(x^K mod p) operator on Q(zeta)[x]/(p); no root isolation.
/// K = 0 is rejected.
CharPoly power_charpoly(const CharPoly& p, const Int& K);

}  // namespace galrep

#endif
