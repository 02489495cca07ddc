#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "galrep/matrix.hpp"

using namespace galrep;

namespace {

Matrix from_rats(unsigned n, std::vector<Rat> entries, unsigned order = 1) {
  Matrix m(n, order);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      m.at(i, j) = CycQ::from_rational(entries[static_cast<size_t>(i) * n + j], order);
  return m;
}

// Deterministic random matrix with small rational entries.
Matrix random_matrix(std::mt19937& rng, unsigned n, unsigned order) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<int> use_zeta(0, 3);
  Matrix m(n, order);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      CycQ v = CycQ::from_rational(Rat(num(rng), den(rng)), order);
      if (order > 1 && use_zeta(rng) == 0) v += CycQ::zeta(order);
      m.at(i, j) = v;
    }
  return m;
}

Matrix random_invertible(std::mt19937& rng, unsigned n, unsigned order) {
  for (;;) {
    Matrix m = random_matrix(rng, n, order);
    if (m.is_invertible()) return m;
  }
}

// char poly evaluated at a scalar must equal det(xI - A); independent check
// through the determinant routine.
void check_charpoly_by_evaluation(const Matrix& a) {
  CharPoly p = char_poly(a);
  for (int x0 : {-2, 0, 1, 3, 7}) {
    Matrix shifted = Matrix::identity(a.dim(), a.order()).scaled(
                         CycQ::from_rational(Rat(x0), a.order())) -
                     a;
    CHECK(p.poly().eval(CycQ::from_rational(Rat(x0), a.order())) == shifted.det());
  }
}

}  // namespace

TEST_CASE("determinant, inverse, powers") {
  Matrix a = from_rats(2, {Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK(a.det().as_rational() == Rat(-2));
  CHECK(a.trace().as_rational() == Rat(5));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.pow(Int(0)).is_identity());
  CHECK(a.pow(Int(3)) == a * a * a);
  CHECK(a.pow(Int(-2)) == (a * a).inverse());
  Matrix sing = from_rats(2, {Rat(1), Rat(2), Rat(2), Rat(4)});
  CHECK(sing.det().is_zero());
  CHECK_THROWS(sing.inverse());
}

TEST_CASE("charpoly examples") {
  CharPoly id2 = char_poly(Matrix::identity(2, 1));
  CHECK(id2.poly().coeff(0).as_rational() == Rat(1));
  CHECK(id2.poly().coeff(1).as_rational() == Rat(-2));
  // rotation [[0,-1],[1,0]] -> x^2 + 1
  Matrix rot = from_rats(2, {Rat(0), Rat(-1), Rat(1), Rat(0)});
  CharPoly p = char_poly(rot);
  CHECK(p.poly().coeff(0).as_rational() == Rat(1));
  CHECK(p.poly().coeff(1).is_zero());
  // companion matrix of x^2 - x - 1
  Matrix comp = from_rats(2, {Rat(0), Rat(1), Rat(1), Rat(1)});
  CharPoly f = char_poly(comp);
  CHECK(f.poly().coeff(0).as_rational() == Rat(-1));
  CHECK(f.poly().coeff(1).as_rational() == Rat(-1));
}

TEST_CASE("charpoly against determinant evaluation oracle") {
  std::mt19937 rng(42);
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned order : {1u, 3u, 4u})
      for (int rep = 0; rep < 5; ++rep) check_charpoly_by_evaluation(random_matrix(rng, n, order));
}

TEST_CASE("Cayley-Hamilton holds exactly") {
  std::mt19937 rng(7);
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned order : {1u, 4u}) {
      Matrix a = random_matrix(rng, n, order);
      CharPoly p = char_poly(a);
      Matrix acc(n, order);  // zero
      Matrix pw = Matrix::identity(n, order);
      for (unsigned i = 0; i <= n; ++i) {
        acc = acc + pw.scaled(p.poly().coeff(i));
        pw = pw * a;
      }
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) CHECK(acc.at(i, j).is_zero());
    }
}

TEST_CASE("conjugacy decisions") {
  Matrix a = from_rats(2, {Rat(1), Rat(0), Rat(0), Rat(2)});
  CHECK(are_conjugate(a, a));
  // diag(1,2) vs [[1,1],[0,2]]: same squarefree char poly
  Matrix b = from_rats(2, {Rat(1), Rat(1), Rat(0), Rat(2)});
  CHECK(are_conjugate(a, b));
  // unipotent vs identity: same char poly, different Jordan type
  Matrix u = from_rats(2, {Rat(1), Rat(1), Rat(0), Rat(1)});
  CHECK(!are_conjugate(u, Matrix::identity(2, 1)));
  CHECK_THROWS(are_conjugate(a, Matrix::identity(3, 1)));
}

TEST_CASE("conjugacy is invariant under conjugation and symmetric") {
  std::mt19937 rng(99);
  for (int rep = 0; rep < 10; ++rep) {
    unsigned n = 2 + (rep % 2);
    Matrix a = random_matrix(rng, n, 1);
    Matrix h = random_invertible(rng, n, 1);
    Matrix conj = h * a * h.inverse();
    CHECK(are_conjugate(a, conj));
    CHECK(are_conjugate(conj, a));
    Matrix b = random_matrix(rng, n, 1);
    CHECK(are_conjugate(a, b) == are_conjugate(h * a * h.inverse(), b));
  }
}

TEST_CASE("invariant factors of a scalar matrix") {
  // xI - 2I over 2x2: invariant factors (x-2), (x-2)
  auto inv = invariant_factors(Matrix::identity(2, 1).scaled(CycQ::from_rational(Rat(2))));
  REQUIRE(inv.size() == 2);
  for (const CycPoly& f : inv) {
    CHECK(f.degree() == 1);
    CHECK(f.coeff(0).as_rational() == Rat(-2));
  }
}

TEST_CASE("matrices over cyclotomic fields") {
  Matrix m(1, 4);
  m.at(0, 0) = CycQ::zeta(4);
  CHECK(m.pow(Int(4)).is_identity());
  CHECK(char_poly(m).poly().coeff(0) == -CycQ::zeta(4));
  Matrix p = m.promoted(12);
  CHECK(p.order() == 12);
  CHECK(p.pow(Int(4)).is_identity());
}
