#ifndef GALREP_POTEQ_HPP
#define GALREP_POTEQ_HPP

#include <optional>
#include <string>
#include <vector>

#include "galrep/matrix.hpp"

namespace galrep {

enum class RepKind { single, free_group, finite };

/// A representation given by exact generator matrices plus a group-kind tag.
struct MatRep {
  RepKind kind = RepKind::single;
  unsigned n = 1;
  unsigned N = 1;
  std::vector<Matrix> generators;

  void validate(size_t closure_cap = 2000) const;
};

enum class PEStatus { equivalent_with_witness, not_equivalent, undecided_at_depth };

struct PEVerdict {
  PEStatus status;
  std::optional<Int> witness_m;
  /// Word over generator indices distinguishing the representations.
  std::optional<std::vector<unsigned>> counterexample;
};

/// K0 = lcm{ M : phi(M) <= n^2 phi(N) }. Any root-of-unity eigenvalue ratio of
/// n x n matrices over Q(zeta_N) has order dividing K0.
Int uniform_m_bound(unsigned n, unsigned N);

/// Tr(rho(w)^m) for the word w over generator indices.
CycQ m_character(const MatRep& rep, const std::vector<unsigned>& word, const Int& m);

/// Decides whether some powers of g1 and g2 have conjugate semisimple parts,
/// by comparing K0-power characteristic polynomials. On success the witness is
/// the minimal valid divisor of K0.
PEVerdict elementwise_pe(const Matrix& g1, const Matrix& g2);

/// Potential-equivalence decision. kind=single and kind=finite are exact;
/// kind=free is a semi-decision over words of length <= depth.
PEVerdict pe_decide(const MatRep& rep1, const MatRep& rep2, unsigned depth,
                    size_t closure_cap = 2000);

/// For finite-closure representations: searches the degree-1 characters of the
/// group (through its abelianization) for chi with
/// Tr(rho2(g)) = chi(g) Tr(rho1(g)) for all g. Returns chi's value list over
/// the closure elements (in closure order), or nullopt.
std::optional<std::vector<CycQ>> twist_equivalent_finite(const MatRep& rep1, const MatRep& rep2,
                                                         size_t closure_cap = 2000);

}  // namespace galrep

#endif
