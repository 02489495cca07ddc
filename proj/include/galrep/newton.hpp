#ifndef GALREP_NEWTON_HPP
#define GALREP_NEWTON_HPP

#include <vector>

#include "galrep/polynomial.hpp"

namespace galrep {

/// Tuple (r_1,...,r_n) indexing the mixed exterior power V^{r_1} (x)
/// (Lambda^2 V)^{r_2} (x) ... (x) (Lambda^n V)^{r_n}.
struct Composition {
  std::vector<unsigned> parts;  // length n

  unsigned size() const { return static_cast<unsigned>(parts.size()); }
  /// Weighted degree r_1 + 2 r_2 + ... + n r_n.
  unsigned degree() const;
  unsigned part_sum() const;

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts == b.parts;
  }
};

/// All compositions of length n with weighted degree m, first part descending.
std::vector<Composition> compositions(unsigned n, unsigned m);

/// Integer coefficient of prod_i e_i^{r_i} in the expansion of the m-th power
/// sum, m = d(r): (-1)^m * m * ((r_1+...+r_n-1)! / (r_1!...r_n!)) * (-1)^{sum r_i}.
/// Rejects the all-zero composition. The factorial ratio is verified integral.
Int newton_coefficient(const Composition& r);

/// The m-th power sum of the roots of p, from its coefficients alone:
/// Tr(g^m) = sum_{d(r)=m} c(r) prod_i e_i^{r_i}, with e_i = 0 for i > n.
CycQ m_trace_from_charpoly(const CharPoly& p, unsigned m);

/// dim of the mixed exterior power for dim V = n: prod_i C(n,i)^{r_i}.
Int dim_lambda(unsigned n, const Composition& r);

/// d_m = 2 * sum_{d(r)=m} dim(r,V)^2.
Int d_m(unsigned n, unsigned m);

}  // namespace galrep

#endif
