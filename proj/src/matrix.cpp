#include "galrep/matrix.hpp"

#include <sstream>

namespace galrep {

Matrix::Matrix(unsigned n, unsigned order)
    : n_(n), order_(order), e_(static_cast<size_t>(n) * n, CycQ::zero(order)) {
  if (n == 0) throw std::invalid_argument("Matrix: dimension must be positive");
}

Matrix::Matrix(unsigned n, unsigned order, std::vector<CycQ> entries)
    : n_(n), order_(order), e_(std::move(entries)) {
  if (n == 0) throw std::invalid_argument("Matrix: dimension must be positive");
  if (e_.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("Matrix: entry count mismatch");
  for (const CycQ& x : e_)
    if (x.order() != order_) throw std::invalid_argument("Matrix: mixed cyclotomic orders");
}

Matrix Matrix::identity(unsigned n, unsigned order) {
  Matrix m(n, order);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = CycQ::one(order);
  return m;
}

void Matrix::check_compatible(const Matrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Matrix: dimension mismatch");
  if (order_ != o.order_) throw std::invalid_argument("Matrix: cyclotomic order mismatch");
}

CycQ Matrix::trace() const {
  CycQ t = CycQ::zero(order_);
  for (unsigned i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_identity() const {
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.check_compatible(b);
  Matrix c(a.n_, a.order_);
  for (unsigned i = 0; i < a.n_; ++i)
    for (unsigned k = 0; k < a.n_; ++k) {
      const CycQ& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (unsigned j = 0; j < a.n_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  a.check_compatible(b);
  Matrix c = a;
  for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  a.check_compatible(b);
  Matrix c = a;
  for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] -= b.e_[i];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.n_ == b.n_ && a.order_ == b.order_ && a.e_ == b.e_;
}

Matrix Matrix::scaled(const CycQ& s) const {
  Matrix c = *this;
  for (CycQ& x : c.e_) x *= s;
  return c;
}

Matrix Matrix::promoted(unsigned new_order) const {
  Matrix c(n_, new_order);
  for (size_t i = 0; i < e_.size(); ++i) c.e_[i] = e_[i].promoted(new_order);
  return c;
}

CycQ Matrix::det() const {
  // Gaussian elimination with row swaps, tracking the sign.
  Matrix w = *this;
  CycQ d = CycQ::one(order_);
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = col;
    while (pivot < n_ && w.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) return CycQ::zero(order_);
    if (pivot != col) {
      for (unsigned j = 0; j < n_; ++j) std::swap(w.at(pivot, j), w.at(col, j));
      d = -d;
    }
    d *= w.at(col, col);
    CycQ inv = w.at(col, col).inverse();
    for (unsigned i = col + 1; i < n_; ++i) {
      if (w.at(i, col).is_zero()) continue;
      CycQ f = w.at(i, col) * inv;
      for (unsigned j = col; j < n_; ++j) w.at(i, j) -= f * w.at(col, j);
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  Matrix w = *this;
  Matrix inv = identity(n_, order_);
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = col;
    while (pivot < n_ && w.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) throw std::domain_error("Matrix::inverse: singular matrix");
    if (pivot != col) {
      for (unsigned j = 0; j < n_; ++j) {
        std::swap(w.at(pivot, j), w.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    CycQ f = w.at(col, col).inverse();
    for (unsigned j = 0; j < n_; ++j) {
      w.at(col, j) *= f;
      inv.at(col, j) *= f;
    }
    for (unsigned i = 0; i < n_; ++i) {
      if (i == col || w.at(i, col).is_zero()) continue;
      CycQ g = w.at(i, col);
      for (unsigned j = 0; j < n_; ++j) {
        w.at(i, j) -= g * w.at(col, j);
        inv.at(i, j) -= g * inv.at(col, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::pow(const Int& k) const {
  if (k < 0) return inverse().pow(-k);
  Matrix acc = identity(n_, order_);
  Matrix base = *this;
  Int e = k;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

std::string Matrix::key() const {
  std::ostringstream os;
  os << n_ << '@' << order_;
  for (const CycQ& x : e_) {
    os << '|';
    for (const Rat& r : x.coeffs()) os << r.get_str() << ',';
  }
  return os.str();
}

CharPoly char_poly(const Matrix& m) {
  const unsigned n = m.dim();
  const unsigned N = m.order();
  // Reduce to upper Hessenberg form by exact similarity transformations.
  Matrix h = m;
  for (unsigned k = 0; k + 2 < n; ++k) {
    unsigned pivot = k + 1;
    while (pivot < n && h.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) continue;
    if (pivot != k + 1) {
      for (unsigned j = 0; j < n; ++j) std::swap(h.at(pivot, j), h.at(k + 1, j));
      for (unsigned i = 0; i < n; ++i) std::swap(h.at(i, pivot), h.at(i, k + 1));
    }
    CycQ inv = h.at(k + 1, k).inverse();
    for (unsigned i = k + 2; i < n; ++i) {
      if (h.at(i, k).is_zero()) continue;
      CycQ f = h.at(i, k) * inv;
      // Row op: R_i -= f R_{k+1}; matching column op: C_{k+1} += f C_i.
      for (unsigned j = 0; j < n; ++j) h.at(i, j) -= f * h.at(k + 1, j);
      for (unsigned i2 = 0; i2 < n; ++i2) h.at(i2, k + 1) += f * h.at(i2, i);
    }
  }
  // Characteristic polynomials of leading principal submatrices of a
  // Hessenberg matrix, by expansion along the last column.
  std::vector<CycPoly> p;
  p.push_back(CycPoly::constant(CycQ::one(N)));
  const CycPoly x = CycPoly::x(N);
  for (unsigned k = 1; k <= n; ++k) {
    CycPoly pk = (x - CycPoly::constant(h.at(k - 1, k - 1))) * p[k - 1];
    CycQ subdiag_prod = CycQ::one(N);
    for (unsigned i = k - 1; i-- > 0;) {
      subdiag_prod *= h.at(i + 1, i);
      pk = pk - p[i].scaled(h.at(i, k - 1) * subdiag_prod);
    }
    p.push_back(std::move(pk));
  }
  return CharPoly(p[n]);
}

namespace {

using PolyMat = std::vector<std::vector<CycPoly>>;

// Smith normal form of a square polynomial matrix over Q(zeta_N)[x].
// Returns the diagonal entries, normalized monic, units dropped.
std::vector<CycPoly> smith_diagonal(PolyMat a, unsigned N) {
  const size_t n = a.size();
  std::vector<CycPoly> diag;
  size_t top = 0;
  while (top < n) {
    // Find a nonzero entry of minimal degree in the trailing block.
    int best_deg = -1;
    size_t bi = top, bj = top;
    for (size_t i = top; i < n; ++i)
      for (size_t j = top; j < n; ++j) {
        int d = a[i][j].degree();
        if (d >= 0 && (best_deg < 0 || d < best_deg)) {
          best_deg = d;
          bi = i;
          bj = j;
        }
      }
    if (best_deg < 0) break;  // trailing block is zero
    std::swap(a[top], a[bi]);
    for (size_t i = top; i < n; ++i) std::swap(a[i][top], a[i][bj]);

    bool clean = true;
    // Clear the pivot column.
    for (size_t i = top + 1; i < n; ++i) {
      if (a[i][top].is_zero()) continue;
      auto [q, r] = CycPoly::divmod(a[i][top], a[top][top]);
      for (size_t j = top; j < n; ++j) a[i][j] = a[i][j] - q * a[top][j];
      if (!r.is_zero()) clean = false;
    }
    // Clear the pivot row.
    for (size_t j = top + 1; j < n; ++j) {
      if (a[top][j].is_zero()) continue;
      auto [q, r] = CycPoly::divmod(a[top][j], a[top][top]);
      for (size_t i = top; i < n; ++i) a[i][j] = a[i][j] - a[i][top] * q;
      if (!r.is_zero()) clean = false;
    }
    if (!clean) continue;  // remainders left; repeat with a smaller pivot

    // Pivot must divide every remaining entry; otherwise fold the offending
    // row into the pivot row and repeat.
    bool divides_all = true;
    for (size_t i = top + 1; i < n && divides_all; ++i)
      for (size_t j = top + 1; j < n && divides_all; ++j) {
        if (!CycPoly::divmod(a[i][j], a[top][top]).second.is_zero()) {
          for (size_t jj = top; jj < n; ++jj) a[top][jj] = a[top][jj] + a[i][jj];
          divides_all = false;
        }
      }
    if (!divides_all) continue;

    diag.push_back(a[top][top].monic());
    ++top;
  }
  // Drop unit factors.
  std::vector<CycPoly> out;
  for (CycPoly& d : diag)
    if (d.degree() > 0) out.push_back(std::move(d));
  (void)N;
  return out;
}

}  // namespace

std::vector<CycPoly> invariant_factors(const Matrix& m) {
  const unsigned n = m.dim();
  const unsigned N = m.order();
  PolyMat a(n, std::vector<CycPoly>(n, CycPoly::zero(N)));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      std::vector<CycQ> c{-m.at(i, j)};
      if (i == j) c.push_back(CycQ::one(N));
      a[i][j] = CycPoly(N, std::move(c));
    }
  return smith_diagonal(std::move(a), N);
}

bool are_conjugate(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("are_conjugate: dimension mismatch");
  if (a.order() != b.order())
    throw std::invalid_argument("are_conjugate: cyclotomic order mismatch");
  return invariant_factors(a) == invariant_factors(b);
}

}  // namespace galrep
