#include "doctest.h"

#include <random>

#include "soclelab/barnes.hpp"
#include "soclelab/error.hpp"

using namespace soclelab;

namespace {
const FieldCtx QQ = FieldCtx::rationals();
const FieldCtx F17 = FieldCtx::gf(17);

Mat random_block(FieldCtx f, std::size_t n, std::mt19937_64& rng) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long c = f.is_rationals() ? static_cast<long long>(rng() % 7) - 3
                                     : static_cast<long long>(rng() % 17);
      m.at(i, j) = Scalar::of(f, c);
    }
  return m;
}

BarnesElement random_element(FieldCtx f, std::mt19937_64& rng, bool nonzero_lambda) {
  long long l = static_cast<long long>(rng() % 5) - 2;
  if (nonzero_lambda && l == 0) l = 1;
  return BarnesElement(Scalar::of(f, l),
                       random_block(f, rng() % 4 == 0 ? 0 : 1 + rng() % 3, rng));
}
}  // namespace

TEST_CASE("blocks are stored in trimmed canonical form") {
  Mat padded(QQ, 2, 2);
  padded.at(0, 0) = Scalar::of(QQ, 2);
  BarnesElement a(Scalar::one(QQ), padded);
  CHECK(a.block_size() == 1);

  Mat single(QQ, 1, 1);
  single.at(0, 0) = Scalar::of(QQ, 2);
  CHECK(a == BarnesElement(Scalar::one(QQ), single));

  // an all-zero block trims away completely
  CHECK(BarnesElement(Scalar::one(QQ), Mat(QQ, 3, 3)) == BarnesElement::one(QQ));
  CHECK(b_trim(Mat(QQ, 5, 5)).rows() == 0);

  // trailing zero pair goes, interior zeros stay
  Mat inner(QQ, 3, 3);
  inner.at(0, 2) = Scalar::of(QQ, 4);
  CHECK(b_trim(inner).rows() == 3);
}

TEST_CASE("matrix-unit arithmetic") {
  auto E = [](std::size_t i, std::size_t j) { return BarnesElement::matrix_unit(QQ, i, j); };
  CHECK(b_mul(E(0, 1), E(1, 1)) == E(0, 1));
  CHECK(b_mul(E(0, 1), E(1, 0)) == E(0, 0));
  CHECK(b_mul(E(0, 1), E(0, 1)).is_zero());

  // (1 - E00) * E00 = 0
  BarnesElement q = b_sub(BarnesElement::one(QQ), E(0, 0));
  CHECK(b_mul(q, E(0, 0)).is_zero());
  CHECK(b_mul(q, q) == q);  // 1 - E00 is idempotent

  // scalar embedding is central
  BarnesElement c = BarnesElement::scalar(QQ, Scalar::of(QQ, 3, 2));
  BarnesElement x = b_add(E(0, 1), BarnesElement::scalar(QQ, Scalar::of(QQ, 1)));
  CHECK(b_mul(c, x) == b_mul(x, c));
  CHECK(b_sub(x, x).is_zero());
}

TEST_CASE("star is an involutive anti-homomorphism") {
  CHECK(b_star(BarnesElement::matrix_unit(QQ, 0, 1)) == BarnesElement::matrix_unit(QQ, 1, 0));
  std::mt19937_64 rng(21);
  for (FieldCtx f : {QQ, F17}) {
    for (int t = 0; t < 40; ++t) {
      BarnesElement a = random_element(f, rng, false);
      BarnesElement b = random_element(f, rng, false);
      CHECK(b_star(b_star(a)) == a);
      CHECK(b_star(b_mul(a, b)) == b_mul(b_star(b), b_star(a)));
      CHECK(b_star(b_add(a, b)) == b_add(b_star(a), b_star(b)));
    }
  }
}

TEST_CASE("socle membership and Fredholmness are a lambda dichotomy") {
  CHECK(b_is_socle(BarnesElement::zero(QQ)));
  CHECK(b_is_socle(BarnesElement::matrix_unit(QQ, 1, 1)));
  CHECK(!b_is_socle(BarnesElement::one(QQ)));
  CHECK(b_is_fredholm(BarnesElement::one(QQ)));
  CHECK(!b_is_fredholm(BarnesElement::matrix_unit(QQ, 0, 0)));
  CHECK(!b_is_fredholm(BarnesElement::zero(QQ)));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    BarnesElement a = random_element(F17, rng, false);
    CHECK(b_is_socle(a) == a.lambda().is_zero());
    CHECK(b_is_fredholm(a) != b_is_socle(a));
  }
}

TEST_CASE("the four lengths coincide and count the shifted kernel") {
  // 1 - E00: the shifted operator 1*(I) + (-E00) kills exactly e_0
  BarnesElement a = b_sub(BarnesElement::one(QQ), BarnesElement::matrix_unit(QQ, 0, 0));
  CHECK(b_xi_l(a) == LengthValue::finite(1));
  CHECK(b_xi_r(a) == LengthValue::finite(1));
  CHECK(b_rho_l(a) == LengthValue::finite(1));
  CHECK(b_rho_r(a) == LengthValue::finite(1));
  CHECK(b_zeta_l(a) == 0);
  CHECK(b_zeta_r(a) == 0);

  // nonzero scalars are invertible: all lengths 0
  BarnesElement c = BarnesElement::scalar(QQ, Scalar::of(QQ, 5));
  CHECK(b_xi_l(c) == LengthValue::finite(0));
  CHECK(b_rho_r(c) == LengthValue::finite(0));

  // socle elements head infinite chains
  BarnesElement s = BarnesElement::matrix_unit(QQ, 0, 1);
  CHECK(!b_xi_l(s).is_finite());
  CHECK(!b_rho_l(s).is_finite());
  CHECK(!b_zeta_l(s).has_value());

  // independent nullity oracle on random Fredholm elements
  std::mt19937_64 rng(17);
  for (FieldCtx f : {QQ, F17}) {
    for (int t = 0; t < 25; ++t) {
      BarnesElement a2 = random_element(f, rng, true);
      std::size_t n = a2.block_size();
      Mat shifted = a2.block() + Mat::identity(f, n).scaled(a2.lambda());
      std::size_t nullity = n - rank(shifted);
      CHECK(b_xi_l(a2) == LengthValue::finite(nullity));
      CHECK(b_rho_r(a2) == LengthValue::finite(nullity));
    }
  }
}

TEST_CASE("Fredholm witnesses are fully certified idempotents") {
  // 1 - E00: the kernel projector is E00 itself
  BarnesElement a = b_sub(BarnesElement::one(QQ), BarnesElement::matrix_unit(QQ, 0, 0));
  BarnesElement p = b_fredholm_witness(a);
  CHECK(p == BarnesElement::matrix_unit(QQ, 0, 0));

  // an invertible scalar has witness p = 0
  CHECK(b_fredholm_witness(BarnesElement::scalar(QQ, Scalar::of(QQ, 3))).is_zero());

  std::mt19937_64 rng(23);
  for (FieldCtx f : {QQ, F17}) {
    for (int t = 0; t < 20; ++t) {
      BarnesElement a2 = random_element(f, rng, true);
      BarnesElement p2 = b_fredholm_witness(a2);
      CHECK(b_mul(p2, p2) == p2);
      CHECK(b_is_socle(p2));
      CHECK(b_mul(a2, p2).is_zero());
      CHECK(b_in_principal_left(b_sub(BarnesElement::one(f), p2), a2));
    }
  }

  CHECK_THROWS_AS(b_fredholm_witness(BarnesElement::matrix_unit(QQ, 0, 0)), Error);
  try {
    b_fredholm_witness(BarnesElement::zero(QQ));
    FAIL("expected NotFredholm");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFredholm);
  }
}

TEST_CASE("principal-ideal membership is decided exactly") {
  std::mt19937_64 rng(29);

  // positive closure: (mu + G) * a always lands in Aa
  for (int t = 0; t < 50; ++t) {
    BarnesElement a = random_element(F17, rng, t % 2 == 0);
    BarnesElement x = random_element(F17, rng, false);
    CHECK(b_in_principal_left(b_mul(x, a), a));
  }

  // negative pinned case: E11 is not in A*E00 (columns other than 0 vanish)
  CHECK(!b_in_principal_left(BarnesElement::matrix_unit(QQ, 1, 1),
                             BarnesElement::matrix_unit(QQ, 0, 0)));
  // a nonzero scalar is not in the ideal of a socle element
  CHECK(!b_in_principal_left(BarnesElement::one(QQ),
                             BarnesElement::matrix_unit(QQ, 0, 0)));
  // everything is in the ideal of an invertible element
  CHECK(b_in_principal_left(BarnesElement::matrix_unit(QQ, 2, 0),
                            BarnesElement::one(QQ)));
}

TEST_CASE("essential socle witnesses and semiprimeness probes") {
  // pinned: a = E01 keeps its column 1 alive, witness E11
  BarnesElement a = BarnesElement::matrix_unit(QQ, 0, 1);
  BarnesElement e = b_essential_socle_witness(a);
  CHECK(e == BarnesElement::matrix_unit(QQ, 1, 1));
  CHECK(b_mul(a, e) == a);

  try {
    b_essential_socle_witness(BarnesElement::zero(QQ));
    FAIL("expected ZeroElement");
  } catch (const Error& e2) {
    CHECK(e2.code() == Errc::ZeroElement);
  }

  // semiprimeness, constructively: for every nonzero a find x with axa != 0.
  // Take E_jj with a e_j != 0 (right witness) and E_kk with row k of a
  // nonzero (left witness via star); then x = E_jk gives axa != 0.
  std::mt19937_64 rng(31);
  int checked = 0;
  for (FieldCtx f : {QQ, F17}) {
    for (int t = 0; t < 100; ++t) {
      BarnesElement a2 = random_element(f, rng, false);
      while (a2.is_zero()) a2 = random_element(f, rng, false);
      BarnesElement er = b_essential_socle_witness(a2);
      BarnesElement el = b_essential_socle_witness(b_star(a2));
      CHECK(!b_mul(a2, er).is_zero());
      CHECK(!b_mul(el, a2).is_zero());  // star-symmetry of essentiality
      std::size_t j = er.block_size() - 1, k = el.block_size() - 1;
      BarnesElement x = BarnesElement::matrix_unit(f, j, k);
      CHECK(!b_mul(b_mul(a2, x), a2).is_zero());
      ++checked;
    }
  }
  CHECK(checked == 200);
}

TEST_CASE("report coherence in both lambda regimes") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    BarnesElement a = random_element(F17, rng, false);
    FredholmReport rep = b_report(a);
    if (a.lambda().is_zero()) {
      CHECK(!rep.is_fredholm);
      CHECK(!rep.is_semi_plus);
      CHECK(!rep.is_weak_plus);
      CHECK(!rep.xi_l.is_finite());
      CHECK(!rep.zeta_l.has_value());
    } else {
      CHECK(rep.is_fredholm);
      CHECK(rep.is_semi_plus);
      CHECK(rep.is_semi_minus);
      CHECK(rep.zeta_l == 0);
      CHECK(rep.zeta_r == 0);
      CHECK(rep.xi_l == rep.rho_l);
    }
  }
}

TEST_CASE("xi is submultiplicative on Fredholm elements") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    BarnesElement a = random_element(F17, rng, true);
    BarnesElement b = random_element(F17, rng, true);
    LengthValue la = b_xi_l(a), lb = b_xi_l(b), lab = b_xi_l(b_mul(a, b));
    REQUIRE(lab.is_finite());
    CHECK(lab.value() <= la.value() + lb.value());
  }
}
