#ifndef GALREP_LOCAL_BOUND_HPP
#define GALREP_LOCAL_BOUND_HPP

#include <map>

#include "galrep/cyclotomic.hpp"

namespace galrep {

/// Invariants of a p-adic coefficient field: residue characteristic ell,
/// absolute ramification index e, absolute residue degree f.
struct LocalFieldParams {
  Int ell;
  unsigned e = 1;
  unsigned f = 1;

  void validate() const;
};

/// (ell^f - 1) * ell^t with t = max{ t >= 0 : phi(ell^t) | e }: an upper bound
/// on the order of the roots-of-unity group, exact for the prime-to-ell part.
Int roots_of_unity_bound(const LocalFieldParams& field);

/// A positive integer together with its (best-effort) prime factorization.
/// Bases flagged non-prime are unfactored composite residuals.
struct FactoredInt {
  Int value;
  std::map<Int, unsigned> factors;
  bool fully_factored = true;

  std::string factored_str() const;
};

/// K0 = lcm{ M = u * ell^t, gcd(u, ell) = 1 : ord_u(ell) * phi(ell^t) <= n^2 e f }.
/// Every root of unity of degree <= n^2 over the field has order dividing K0,
/// so K0 is a valid power bound for eigenvalue-ratio arguments.
/// With factor=false only the value is computed (the factorization of large
/// bounds can be expensive).
FactoredInt paper_m_bound(unsigned n, const LocalFieldParams& field, bool factor = true);

/// Best-effort factorization: trial division plus Pollard rho with a budget.
FactoredInt factor_integer(const Int& n);

}  // namespace galrep

#endif
