#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "galrep/cyclotomic.hpp"

using namespace galrep;

namespace {

CycQ zeta_pow(unsigned N, unsigned k) { return CycQ::zeta(N).pow(k); }

}  // namespace

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(3) == 2);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);
  CHECK_THROWS(euler_phi(0));
}

TEST_CASE("cyclotomic polynomials") {
  // Phi_1 = x - 1, Phi_2 = x + 1, Phi_4 = x^2 + 1, Phi_3 = x^2 + x + 1
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
}

TEST_CASE("reduction to normal form") {
  // zeta_4^2 = -1
  CycQ a = CycQ::reduce({Rat(0), Rat(0), Rat(1)}, 4);
  CHECK(a == CycQ::from_rational(Rat(-1), 4));
  // zeta_3^2 = -1 - zeta_3
  CycQ b = CycQ::reduce({Rat(0), Rat(0), Rat(1)}, 3);
  CHECK(b == CycQ::from_rational(Rat(-1), 3) - CycQ::zeta(3));
  // constant 7/2 at N = 1
  CycQ c = CycQ::reduce({Rat(7, 2)}, 1);
  CHECK(c.is_rational());
  CHECK(c.as_rational() == Rat(7, 2));
  CHECK_THROWS(CycQ::reduce({Rat(1)}, 0));
}

TEST_CASE("field arithmetic") {
  CycQ z = CycQ::zeta(5);
  // zeta_5 satisfies Phi_5: 1 + z + z^2 + z^3 + z^4 = 0
  CycQ s = CycQ::one(5) + z + z.pow(2) + z.pow(3) + z.pow(4);
  CHECK(s.is_zero());
  // inverse and division
  CycQ e = (CycQ::one(5) + z);
  CHECK((e * e.inverse()).is_one());
  CHECK((e / e).is_one());
  CHECK_THROWS(CycQ::zero(5).inverse());
  // distributivity on a sample
  CycQ x = CycQ::from_rational(Rat(2, 3), 5) + z.pow(2);
  CycQ y = z - CycQ::from_rational(Rat(1, 7), 5);
  CHECK(x * (y + e) == x * y + x * e);
  // negative powers
  CHECK(z.pow(-1) == z.pow(4));
  CHECK(z.pow(Int(-7)) * z.pow(Int(7)) == CycQ::one(5));
}

TEST_CASE("promotion between cyclotomic fields") {
  // zeta_3 = zeta_6^2 inside Q(zeta_6)
  CycQ z3 = CycQ::zeta(3).promoted(6);
  CHECK(z3 == zeta_pow(6, 2));
  // promotion preserves rationals and arithmetic
  CycQ r = CycQ::from_rational(Rat(5, 4), 3);
  CHECK(r.promoted(12).as_rational() == Rat(5, 4));
  CycQ a = CycQ::zeta(3) + CycQ::one(3);
  CHECK(a.promoted(12) == CycQ::zeta(3).promoted(12) + CycQ::one(12));
  CHECK_THROWS(CycQ::zeta(4).promoted(6));  // 4 does not divide 6
}

TEST_CASE("root of unity orders") {
  CHECK(root_of_unity_order(CycQ::from_rational(Rat(-1))) == 2u);
  CHECK(root_of_unity_order(CycQ::zeta(5)) == 5u);
  CHECK(!root_of_unity_order(CycQ::from_rational(Rat(2))).has_value());
  CHECK_THROWS(root_of_unity_order(CycQ::zero(3)));
  // -zeta_5 has order 10 (order 2N for odd N)
  CHECK(root_of_unity_order(-CycQ::zeta(5)) == 10u);
  CHECK(root_of_unity_order(zeta_pow(12, 4)) == 3u);
  // non-root-of-unity algebraic unit
  CHECK(!root_of_unity_order(CycQ::one(5) + CycQ::zeta(5)).has_value());
  // verify order contract by exact powering
  for (unsigned N : {1u, 3u, 4u, 5u, 8u, 12u}) {
    CycQ z = CycQ::zeta(N);
    auto k = root_of_unity_order(z);
    REQUIRE(k.has_value());
    CHECK(z.pow(Int(*k)).is_one());
    for (unsigned j = 1; j < *k; ++j) CHECK(!z.pow(Int(j)).is_one());
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("2/1") == Rat(2));
  CHECK(parse_rational("-3/6") == Rat(-1, 2));
  CHECK(parse_rational("7") == Rat(7));
  CHECK_THROWS(parse_rational("0.5"));
  CHECK_THROWS(parse_rational("1e3"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("string rendering round trips through meaning") {
  CHECK(CycQ::from_rational(Rat(-7, 3)).str() == "-7/3");
  CHECK(CycQ::zeta(4).str() == "1*z4");
  CHECK(CycQ::zero(4).str() == "0");
}
