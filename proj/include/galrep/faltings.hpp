#ifndef GALREP_FALTINGS_HPP
#define GALREP_FALTINGS_HPP

#include <optional>
#include <string>
#include <vector>

#include "galrep/cyclotomic.hpp"

namespace galrep {

/// Finite group as a labeled multiplication table. Associativity and inverses
/// are verified on construction (exhaustively up to 200 elements).
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::string> labels,
                                std::vector<std::vector<unsigned>> table);
  /// BFS closure of permutation generators (each a permutation of {0..k-1}).
  static FiniteGroup from_permutations(const std::vector<std::vector<unsigned>>& generators);

  size_t size() const { return table_.size(); }
  unsigned identity() const { return identity_; }
  unsigned mul(unsigned i, unsigned j) const { return table_[i][j]; }
  unsigned inv(unsigned i) const { return inv_[i]; }
  const std::string& label(unsigned i) const { return labels_[i]; }

 private:
  FiniteGroup() = default;
  void finish(bool verify_axioms);
  std::vector<std::string> labels_;
  std::vector<std::vector<unsigned>> table_;
  std::vector<unsigned> inv_;
  unsigned identity_ = 0;
};

/// Exact partition by conjugacy; classes ordered by least element index.
std::vector<std::vector<unsigned>> conjugacy_classes(const FiniteGroup& g);

/// Frobenius assignment: (place label, group element index) pairs.
struct PlaceTable {
  std::vector<std::pair<std::string, unsigned>> places;
};

/// Greedy covering set T of places whose classes cover every conjugacy class
/// (largest uncovered class first, ties by place order). Throws naming the
/// class if some class is unreachable.
std::vector<std::string> frobenius_cover(const FiniteGroup& g, const PlaceTable& places);

/// Multiplicative family of invertible matrices over Z/ell^k, one per group
/// element.
struct ModRep {
  unsigned n = 1;
  Int modulus;                          // ell^k
  std::vector<std::vector<Int>> mats;   // one row-major n*n matrix per element

  /// Checks shape, multiplicativity (exhaustively for |G| <= 200) and
  /// invertibility of every image.
  void validate(const FiniteGroup& g) const;
  Int trace_of(unsigned element) const;
};

struct TraceDeterminationReport {
  bool determination_holds = false;  // [agree on T] implies [agree globally]
  bool traces_agree_on_t = false;
  bool traces_agree_globally = false;
  bool spans_equal = false;  // module generated by classes meeting T vs all of G
  std::optional<std::string> distinguishing_place;
};

/// Checks whether trace agreement of rho1, rho2 at the elements assigned to T
/// forces global trace agreement, and whether the span over Z/ell^k of
/// {rho1(g) (+) rho2(g)} for g in the classes meeting T equals the span over
/// all g. With single_representative=true only the T-assigned elements
/// themselves enter the span (diagnostic variant, no completeness claim).
TraceDeterminationReport trace_determination_check(const FiniteGroup& g, const ModRep& rho1,
                                                   const ModRep& rho2,
                                                   const std::vector<std::string>& t_labels,
                                                   const PlaceTable& places,
                                                   bool single_representative = false);

/// Canonical Howell-form basis of the row span over Z/m (m a prime power).
std::vector<std::vector<Int>> howell_form(std::vector<std::vector<Int>> rows, const Int& modulus);

}  // namespace galrep

#endif
