#ifndef GALREP_MATRIX_HPP
#define GALREP_MATRIX_HPP

#include <vector>

#include "galrep/polynomial.hpp"

namespace galrep {

/// Square matrix over Q(zeta_N); all entries share one cyclotomic order.
class Matrix {
 public:
  Matrix(unsigned n, unsigned order);
  Matrix(unsigned n, unsigned order, std::vector<CycQ> entries);

  static Matrix identity(unsigned n, unsigned order);

  unsigned dim() const { return n_; }
  unsigned order() const { return order_; }
  CycQ& at(unsigned i, unsigned j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const CycQ& at(unsigned i, unsigned j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  CycQ trace() const;
  CycQ det() const;
  bool is_identity() const;
  bool is_invertible() const { return !det().is_zero(); }
  Matrix inverse() const;
  /// k may be negative; the matrix must then be invertible.
  Matrix pow(const Int& k) const;
  Matrix scaled(const CycQ& s) const;
  /// Re-express every entry in Q(zeta_L), N | L.
  Matrix promoted(unsigned new_order) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Canonical key for hashing/closure bookkeeping.
  std::string key() const;

 private:
  void check_compatible(const Matrix& o) const;
  unsigned n_;
  unsigned order_;
  std::vector<CycQ> e_;  // row-major
};

/// Exact characteristic polynomial via Hessenberg reduction over the field.
CharPoly char_poly(const Matrix& m);

/// Invariant factors (monic, each dividing the next) of xI - A over Q(zeta_N)[x].
std::vector<CycPoly> invariant_factors(const Matrix& a);

/// True iff A and B are conjugate in GL_n(Q(zeta_N)): identical rational
/// canonical form data. Throws on dimension or order mismatch.
bool are_conjugate(const Matrix& a, const Matrix& b);

}  // namespace galrep

#endif
