#include "doctest.h"

#include <random>

#include "soclelab/algebra.hpp"
#include "soclelab/error.hpp"
#include "soclelab/families.hpp"

using namespace soclelab;

namespace {
const FieldCtx QQ = FieldCtx::rationals();
const FieldCtx F17 = FieldCtx::gf(17);

Element unit_elt(const AlgebraSC::Ptr& a, std::size_t n, std::size_t r, std::size_t c) {
  return Element::basis(a, matrix_unit_index(n, r, c));
}

Vec random_coords(const AlgebraSC::Ptr& a, std::mt19937_64& rng) {
  Vec v = zero_vec(a->field(), a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    v[i] = a->field().is_rationals()
               ? Scalar::of(a->field(), static_cast<long long>(rng() % 9) - 4)
               : Scalar::of_residue(a->field(), rng() % a->field().characteristic());
  }
  return v;
}
}  // namespace

TEST_CASE("matrix algebra multiplies like matrix units") {
  auto m2 = matrix_algebra(2, F17);
  CHECK(m2->dim() == 4);
  CHECK(m2->name() == "M2");
  CHECK(m2->has_involution());

  Element e11 = unit_elt(m2, 2, 0, 0), e12 = unit_elt(m2, 2, 0, 1);
  Element e21 = unit_elt(m2, 2, 1, 0), e22 = unit_elt(m2, 2, 1, 1);

  CHECK(e11 * e12 == e12);
  CHECK(e12 * e21 == e11);
  CHECK(e21 * e12 == e22);
  CHECK((e12 * e12).is_zero());
  CHECK(e12.star() == e21);          // transpose involution
  CHECK(e11.star() == e11);
  CHECK(e11 + e22 == Element::unit(m2));

  // the basis-product cache agrees with mul_coords on unit vectors
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(m2->basis_product(i, j) ==
            m2->mul_coords(unit_vec(F17, 4, i), unit_vec(F17, 4, j)));
    }
}

TEST_CASE("construction rejects non-associative structure constants") {
  // e0 is the unit; e1*e1 = e2 and e1*e2 = e0 break associativity:
  // (e1 e1) e1 = e2 e1 = 0 but e1 (e1 e1) = e1 e2 = e0.
  const Scalar one = Scalar::one(QQ);
  std::vector<ScEntry> mult;
  for (std::size_t i = 0; i < 3; ++i) {
    mult.push_back({0, i, i, one});
    if (i != 0) mult.push_back({i, 0, i, one});
  }
  mult.push_back({1, 1, 2, one});
  mult.push_back({1, 2, 0, one});

  try {
    AlgebraSC::build(QQ, 3, mult, unit_vec(QQ, 3, 0));
    FAIL("expected AssociativityViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AssociativityViolation);
    CHECK(e.witness() == std::array<long, 3>{1, 1, 1});
  }
}

TEST_CASE("construction rejects a wrong unit") {
  // only e1*e1 = e1 is declared, so e0 (claimed unit) fails e0*e1 = e1
  std::vector<ScEntry> mult = {{1, 1, 1, Scalar::one(QQ)}};
  try {
    AlgebraSC::build(QQ, 2, mult, unit_vec(QQ, 2, 0));
    FAIL("expected UnitViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnitViolation);
  }
}

TEST_CASE("construction rejects a non-multiplicative involution") {
  // on M2, swapping E11 <-> E12 is linear but not an anti-homomorphism
  auto m2 = matrix_algebra(2, QQ);
  Mat bad = Mat::identity(QQ, 4);
  bad.at(0, 0) = Scalar::zero(QQ);
  bad.at(1, 1) = Scalar::zero(QQ);
  bad.at(0, 1) = Scalar::one(QQ);
  bad.at(1, 0) = Scalar::one(QQ);
  std::vector<ScEntry> mult = m2->entries();
  CHECK_THROWS_AS(AlgebraSC::build(QQ, 4, mult, m2->unit(), bad), Error);
  try {
    AlgebraSC::build(QQ, 4, mult, m2->unit(), bad);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvolutionViolation);
  }
}

TEST_CASE("direct product is componentwise") {
  auto m2 = matrix_algebra(2, F17);
  auto m1 = matrix_algebra(1, F17);
  auto prod = direct_product(m2, m1);
  CHECK(prod->dim() == 5);
  CHECK(prod->name() == "M2xM1");
  CHECK(prod->has_involution());

  // unit = (1_M2, 1_M1)
  Vec u = zero_vec(F17, 5);
  u[0] = u[3] = u[4] = Scalar::one(F17);
  CHECK(prod->unit() == u);

  // (E12, 0) * (E21, 0) = (E11, 0); cross terms vanish
  Vec a = unit_vec(F17, 5, 1), b = unit_vec(F17, 5, 2);
  CHECK(prod->mul_coords(a, b) == unit_vec(F17, 5, 0));
  CHECK(is_zero_vec(prod->mul_coords(a, unit_vec(F17, 5, 4))));

  // involution requires both factors to carry one
  auto t2 = upper_triangular_algebra(2, F17);
  CHECK(!direct_product(m2, t2)->has_involution());
  CHECK_THROWS_AS(direct_product(m2, matrix_algebra(1, QQ)), Error);
}

TEST_CASE("group algebra validates its Cayley table") {
  auto c3 = group_algebra(cyclic_group_table(3), F17, "F[c3]");
  CHECK(c3->dim() == 3);
  CHECK(c3->unit() == unit_vec(F17, 3, 0));
  // g * g = g^2, g^2 * g^2 = g
  CHECK(c3->mul_coords(unit_vec(F17, 3, 1), unit_vec(F17, 3, 1)) == unit_vec(F17, 3, 2));
  CHECK(c3->mul_coords(unit_vec(F17, 3, 2), unit_vec(F17, 3, 2)) == unit_vec(F17, 3, 1));
  // involution g -> g^{-1}
  CHECK(Element::basis(c3, 1).star() == Element::basis(c3, 2));

  // s3 is non-commutative: a transposition and a 3-cycle do not commute
  auto s3 = group_algebra(symmetric3_table(), F17, "F[s3]");
  Vec x = unit_vec(F17, 6, 1), y = unit_vec(F17, 6, 3);
  CHECK(s3->mul_coords(x, y) != s3->mul_coords(y, x));

  // broken table: make one entry destroy associativity
  auto bad = cyclic_group_table(3);
  bad[1][1] = 1;  // g*g = g while g has an inverse elsewhere
  try {
    group_algebra(bad, F17, "broken");
    FAIL("expected NotAGroup");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAGroup);
  }
}

TEST_CASE("opposite algebra reverses products and is memoized") {
  auto m2 = matrix_algebra(2, F17);
  auto op = opposite(m2);
  CHECK(op.get() == opposite(m2).get());  // memoized handle

  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    Vec a = random_coords(m2, rng), b = random_coords(m2, rng);
    CHECK(op->mul_coords(a, b) == m2->mul_coords(b, a));
  }
  CHECK(op->unit() == m2->unit());
}

TEST_CASE("regular representations match mul_coords") {
  auto s3 = group_algebra(symmetric3_table(), QQ, "F[s3]");
  std::mt19937_64 rng(7);
  for (int t = 0; t < 25; ++t) {
    Vec a = random_coords(s3, rng), x = random_coords(s3, rng);
    CHECK(s3->left_regular(a).apply(x) == s3->mul_coords(a, x));
    CHECK(s3->right_regular(a).apply(x) == s3->mul_coords(x, a));
  }
}

TEST_CASE("zero algebra is a legal degenerate value") {
  auto z = AlgebraSC::zero_algebra(F17);
  CHECK(z->dim() == 0);
  CHECK(z->is_zero_algebra());
  CHECK(Element::zero(z) == Element::unit(z));
}

TEST_CASE("quotient algebra carries coordinate maps") {
  // T2 mod its strictly-upper part is the diagonal algebra F x F
  auto t2 = upper_triangular_algebra(2, F17);
  Subspace rad = Subspace::span(F17, 3, {unit_vec(F17, 3, triangular_unit_index(2, 0, 1))});
  QuotientAlgebra q = quotient_algebra(t2, rad);
  CHECK(q.alg->dim() == 2);

  // projection o section = identity on the quotient
  CHECK(q.projection * q.section == Mat::identity(F17, 2));
  // the projection is an algebra map on a sample product
  Vec a = unit_vec(F17, 3, 0), b = unit_vec(F17, 3, 1);  // E11, E12
  CHECK(q.projection.apply(t2->mul_coords(a, b)) ==
        q.alg->mul_coords(q.projection.apply(a), q.projection.apply(b)));

  // quotient by the full space is the zero algebra
  QuotientAlgebra qz = quotient_algebra(t2, Subspace::full(F17, 3));
  CHECK(qz.alg->is_zero_algebra());

  // a left-only ideal is rejected: the column span {E11, E21} inside M2
  auto m2 = matrix_algebra(2, F17);
  Subspace col = Subspace::span(F17, 4, {unit_vec(F17, 4, 0), unit_vec(F17, 4, 2)});
  CHECK_THROWS_AS(quotient_algebra(m2, col), Error);
}

TEST_CASE("element handles enforce algebra identity") {
  auto m2 = matrix_algebra(2, F17);
  auto other = matrix_algebra(2, F17);  // equal structure, distinct handle
  CHECK_THROWS_AS((void)(Element::unit(m2) * Element::unit(other)), Error);
  CHECK_THROWS_AS(Element(m2, zero_vec(F17, 3)), Error);
  CHECK_THROWS_AS(Element::basis(m2, 4), Error);

  // scaling and negation
  Element e12 = Element::basis(m2, 1);
  CHECK(e12.scaled(Scalar::of(F17, 2)) + e12.scaled(Scalar::of(F17, -2)) ==
        Element::zero(m2));
  CHECK(-e12 == e12.scaled(Scalar::of(F17, -1)));
}
