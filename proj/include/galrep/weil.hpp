#ifndef GALREP_WEIL_HPP
#define GALREP_WEIL_HPP

#include <cstdint>
#include <vector>

#include "galrep/cyclotomic.hpp"

namespace galrep {

/// Monic integer polynomial, ascending coefficients.
using ZPoly = std::vector<Int>;

/// Monic integer polynomial all of whose complex roots have absolute value
/// q^{w/2}.
struct WeilPoly {
  Int q;
  unsigned w = 0;
  unsigned d = 1;
  ZPoly coeffs;  // length d + 1, leading coefficient 1
};

bool is_prime_power(const Int& q);

/// True iff every root of the monic integer polynomial lies on the circle of
/// radius q^{w/2}. Decided exactly: endpoint factors are stripped, the
/// self-inversive pairing is checked, and the trace polynomial is certified
/// to have all roots real in [-2 q^{w/2}, 2 q^{w/2}] by Sturm sequences.
bool is_weil_poly(const ZPoly& coeffs, const Int& q, unsigned w);

/// Raised when the candidate count exceeds the configured budget.
struct WeilBudgetExceeded : std::runtime_error {
  WeilBudgetExceeded(Int candidates_, uint64_t budget_)
      : std::runtime_error("weil enumeration candidate count " + candidates_.get_str() +
                           " exceeds budget " + std::to_string(budget_)),
        candidates(std::move(candidates_)),
        budget(budget_) {}
  Int candidates;
  uint64_t budget;
};

constexpr uint64_t kDefaultWeilBudget = 10000000;

/// The complete, duplicate-free, lexicographically ordered list of monic
/// degree-d integer polynomials with all roots of absolute value q^{w/2}.
std::vector<WeilPoly> enumerate_weil(const Int& q, unsigned w, unsigned d,
                                     uint64_t budget = kDefaultWeilBudget);

uint64_t weil_count(const Int& q, unsigned w, unsigned d, uint64_t budget = kDefaultWeilBudget);

}  // namespace galrep

#endif
