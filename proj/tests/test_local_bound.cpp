#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "galrep/local_bound.hpp"

using namespace galrep;

namespace {

Int phi_int(const Int& n) {
  Int result = n;
  Int m = n;
  for (Int p(2); p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

Int ord_mod(const Int& ell, const Int& u) {
  if (u == 1) return Int(1);
  Int x = ell % u;
  Int acc = x;
  for (Int k(1);; ++k) {
    if (acc == 1) return k;
    acc = acc * x % u;
  }
}

// Direct lcm over the defining set { u * ell^t : ord_u(ell) * phi(ell^t) <= B },
// enumerating u over all integers prime to ell with a divisor bound u <= ell^B.
Int set_lcm_oracle(const Int& ell, const Int& bound) {
  Int ell_B(1);
  for (Int j(0); j < bound; ++j) ell_B *= ell;
  Int acc(1);
  for (Int u(1); u <= ell_B - 1; ++u) {
    if (u % ell == 0) continue;
    Int o = ord_mod(ell, u);
    if (o > bound) continue;
    Int ell_t(1);
    for (unsigned t = 0;; ++t) {
      Int phi_lt = t == 0 ? Int(1) : phi_int(ell_t * ell);
      if (t > 0 && o * phi_lt > bound) break;
      if (t > 0) ell_t *= ell;
      acc = lcm(acc, Int(u * ell_t));
      if (t > 30) break;
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS(LocalFieldParams{Int(4), 1, 1}.validate());
  CHECK_THROWS(LocalFieldParams{Int(5), 0, 1}.validate());
  LocalFieldParams{Int(5), 1, 1}.validate();
}

TEST_CASE("roots of unity bound") {
  CHECK(roots_of_unity_bound({Int(5), 1, 1}) == 4);   // mu(Q_5) = Z/4
  CHECK(roots_of_unity_bound({Int(2), 1, 1}) == 2);   // mu(Q_2) = {+-1}
  CHECK(roots_of_unity_bound({Int(3), 2, 1}) == 6);   // Q_3(zeta_3)
  CHECK(roots_of_unity_bound({Int(7), 1, 2}) == 48);  // 7^2 - 1
}

TEST_CASE("power bound pinned values") {
  CHECK(paper_m_bound(1, {Int(5), 1, 1}).value == 4);
  CHECK(paper_m_bound(1, {Int(2), 1, 1}).value == 2);
  CHECK(paper_m_bound(1, {Int(3), 1, 1}).value == 2);
  auto q5 = paper_m_bound(1, {Int(5), 1, 1});
  CHECK(q5.fully_factored);
  CHECK(q5.factored_str() == "2^2");
}

TEST_CASE("closed form matches the defining-set lcm") {
  for (long ell : {2, 3, 5}) {
    for (unsigned bound = 1; bound <= 4; ++bound) {
      // pick (n,e,f) with n^2 e f == bound when possible: use n=1, e=1, f=bound
      Int direct = set_lcm_oracle(Int(ell), Int(bound));
      Int closed = paper_m_bound(1, {Int(ell), 1, bound}, false).value;
      CHECK(closed == direct);
    }
  }
}

TEST_CASE("divisibility monotonicity") {
  for (long ell : {2, 3, 5, 7})
    for (unsigned n = 1; n <= 2; ++n)
      for (unsigned e = 1; e <= 2; ++e)
        for (unsigned f = 1; f <= 2; ++f) {
          Int base = paper_m_bound(n, {Int(ell), e, f}, false).value;
          CHECK(paper_m_bound(n + 1, {Int(ell), e, f}, false).value % base == 0);
          CHECK(paper_m_bound(n, {Int(ell), 2 * e, f}, false).value % base == 0);
          CHECK(paper_m_bound(n, {Int(ell), e, 2 * f}, false).value % base == 0);
        }
}

TEST_CASE("prime-to-ell part of the unit bound divides the power bound") {
  for (long ell : {2, 3, 5, 7})
    for (unsigned e = 1; e <= 3; ++e)
      for (unsigned f = 1; f <= 3; ++f) {
        LocalFieldParams field{Int(ell), e, f};
        Int pk = paper_m_bound(1, field, false).value;
        Int pow(1);
        for (unsigned i = 0; i < f; ++i) pow *= ell;
        CHECK(pk % Int(pow - 1) == 0);
      }
}

TEST_CASE("factorization helper") {
  auto f = factor_integer(Int(2) * 3 * 3 * 5 * 97);
  CHECK(f.fully_factored);
  CHECK(f.factors.at(Int(3)) == 2);
  CHECK(f.factored_str() == "2 * 3^2 * 5 * 97");
  // product of two large-ish primes exercises the rho path
  Int p("1000003"), q("1000033");
  auto g = factor_integer(p * q);
  CHECK(g.fully_factored);
  CHECK(g.factors.at(p) == 1);
  CHECK(g.factors.at(q) == 1);
  CHECK_THROWS(factor_integer(Int(0)));
}
