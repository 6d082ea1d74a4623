#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "soclelab/error.hpp"
#include "soclelab/field.hpp"
#include "soclelab/matrix.hpp"
#include "soclelab/poly.hpp"
#include "soclelab/subspace.hpp"

using namespace soclelab;

namespace {
const FieldCtx QQ = FieldCtx::rationals();
const FieldCtx F2 = FieldCtx::gf(2);
const FieldCtx F5 = FieldCtx::gf(5);
const FieldCtx F7 = FieldCtx::gf(7);

Mat mat2(FieldCtx f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vec> vr;
  std::size_t cols = rows.begin()->size();
  for (const auto& r : rows) {
    Vec v;
    for (long long x : r) v.push_back(Scalar::of(f, x));
    vr.push_back(v);
  }
  return Mat::from_rows(f, cols, vr);
}

Vec vec_of(FieldCtx f, std::initializer_list<long long> xs) {
  Vec v;
  for (long long x : xs) v.push_back(Scalar::of(f, x));
  return v;
}
}  // namespace

TEST_CASE("scalar arithmetic is canonical in both fields") {
  // rationals normalize to reduced fractions
  Scalar a = Scalar::of(QQ, 2, 4);
  CHECK(a == Scalar::of(QQ, 1, 2));
  CHECK(a.to_string() == "1/2");
  CHECK((a + a).is_one());
  CHECK((a - a).is_zero());
  CHECK((a * Scalar::of(QQ, 4)).to_string() == "2");

  // prime-field residues are least nonnegative
  Scalar b = Scalar::of(F5, -3);
  CHECK(b.residue() == 2);
  CHECK((b * b).residue() == 4);
  CHECK(b.inverse() * b == Scalar::one(F5));
  CHECK(Scalar::of(F5, 7) == Scalar::of(F5, 2));

  // parse round trips, including modular division
  CHECK(Scalar::parse(QQ, "-3/6") == Scalar::of(QQ, -1, 2));
  CHECK(Scalar::parse(F5, "1/2") == Scalar::of_residue(F5, 3));  // 2*3=6=1 mod 5
  CHECK_THROWS_AS(Scalar::parse(QQ, "abc"), Error);
  CHECK_THROWS_AS(Scalar::zero(F5).inverse(), Error);
  CHECK_THROWS_AS((void)(Scalar::one(QQ) + Scalar::one(F5)), Error);

  // mixed checks: pow, compare totality
  CHECK(Scalar::of(F7, 3).pow(6).is_one());  // Fermat
  CHECK(Scalar::compare(Scalar::of(QQ, 1, 3), Scalar::of(QQ, 1, 2)) < 0);
}

TEST_CASE("field construction validates p") {
  CHECK_THROWS_AS(FieldCtx::gf(1), Error);
  CHECK_THROWS_AS(FieldCtx::gf(6), Error);
  CHECK_THROWS_AS(FieldCtx::gf(1ull << 33), Error);
  CHECK(FieldCtx::gf(4294967291ull).characteristic() == 4294967291ull);  // largest p < 2^32
}

TEST_CASE("rref handles the three pinned cases") {
  // identity is its own RREF
  Mat id = Mat::identity(QQ, 2);
  auto r1 = rref(id);
  CHECK(r1.mat == id);
  CHECK(r1.pivots == std::vector<std::size_t>{0, 1});

  // rank-1 matrix: [[2,4],[1,2]] reduces to the single row [1,2]
  auto r2 = rref(mat2(QQ, {{2, 4}, {1, 2}}));
  CHECK(r2.mat == mat2(QQ, {{1, 2}}));
  CHECK(r2.pivots == std::vector<std::size_t>{0});

  // zero matrix: no rows survive
  auto r3 = rref(Mat(QQ, 3, 3));
  CHECK(r3.mat.rows() == 0);
  CHECK(r3.pivots.empty());
}

TEST_CASE("rref is idempotent and rank-correct on random input") {
  std::mt19937_64 rng(0x5eed0001);
  for (FieldCtx f : {QQ, F5}) {
    for (int trial = 0; trial < 40; ++trial) {
      Mat m = oracles::random_mat(f, 4, 6, rng);
      auto r = rref(m);
      auto rr = rref(r.mat);
      CHECK(rr.mat == r.mat);
      CHECK(rr.pivots == r.pivots);
      CHECK(r.pivots.size() == r.mat.rows());
      // row space is preserved: every original row reduces to zero
      Subspace s = Subspace::row_space(m);
      for (std::size_t i = 0; i < m.rows(); ++i) CHECK(s.contains(m.row(i)));
      CHECK(s.dim() == r.mat.rows());
    }
  }
}

TEST_CASE("fraction-free elimination survives coefficient blowup") {
  // Hilbert-like matrix: entries 1/(i+j+1). Naive elimination is fine for
  // correctness; this pins exactness (float would fail rank detection).
  Mat h(QQ, 5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) h.at(i, j) = Scalar::of(QQ, 1, (long long)(i + j + 1));
  CHECK(rank(h) == 5);
  // append a row that is the exact sum of the first two -> rank stays 5 on 6 rows
  Mat h2(QQ, 6, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) h2.at(i, j) = h.at(i, j);
  for (std::size_t j = 0; j < 5; ++j) h2.at(5, j) = h.at(0, j) + h.at(1, j);
  CHECK(rank(h2) == 5);
}

TEST_CASE("solve returns verified solutions and detects inconsistency") {
  // identity system
  Vec b = vec_of(QQ, {3, -4});
  auto x1 = solve(Mat::identity(QQ, 2), b);
  REQUIRE(x1.has_value());
  CHECK(*x1 == b);

  // underdetermined over GF(5): any returned x must satisfy x0 + x1 = 3
  auto x2 = solve(mat2(F5, {{1, 1}}), vec_of(F5, {3}));
  REQUIRE(x2.has_value());
  CHECK((*x2)[0] + (*x2)[1] == Scalar::of(F5, 3));

  // inconsistent
  CHECK_FALSE(solve(mat2(QQ, {{0}}), vec_of(QQ, {1})).has_value());

  // property: substitution verifies every returned solution
  std::mt19937_64 rng(0x5eed0002);
  for (int trial = 0; trial < 60; ++trial) {
    FieldCtx f = (trial % 2 == 0) ? QQ : F7;
    Mat m = oracles::random_mat(f, 3, 4, rng);
    Vec rhs;
    for (int i = 0; i < 3; ++i) rhs.push_back(oracles::random_scalar(f, rng));
    auto x = solve(m, rhs);
    if (x.has_value()) CHECK(m.apply(*x) == rhs);
    // a consistent rhs (image of a random vector) must always be solvable
    Vec y;
    for (int i = 0; i < 4; ++i) y.push_back(oracles::random_scalar(f, rng));
    auto x3 = solve(m, m.apply(y));
    REQUIRE(x3.has_value());
    CHECK(m.apply(*x3) == m.apply(y));
  }
}

TEST_CASE("null_space spans exactly the kernel") {
  std::mt19937_64 rng(0x5eed0003);
  for (int trial = 0; trial < 40; ++trial) {
    FieldCtx f = (trial % 2 == 0) ? QQ : F5;
    Mat m = oracles::random_mat(f, 3, 5, rng);
    Mat ns = null_space(m);
    CHECK(ns.rows() + rank(m) == 5);  // rank-nullity
    for (std::size_t i = 0; i < ns.rows(); ++i) CHECK(is_zero_vec(m.apply(ns.row(i))));
  }
}

TEST_CASE("subspace lattice operations match hand computations") {
  // span{e1,e2} ∩ span{e2,e3} = span{e2} in F^3
  auto e = [&](std::size_t i) { return unit_vec(QQ, 3, i); };
  Subspace u = Subspace::span(QQ, 3, {e(0), e(1)});
  Subspace v = Subspace::span(QQ, 3, {e(1), e(2)});
  Subspace w = intersect(u, v);
  CHECK(w == Subspace::span(QQ, 3, {e(1)}));

  CHECK(u + Subspace::zero(QQ, 3) == u);
  CHECK(Subspace::full(QQ, 3).codim() == 0);
  CHECK(u.contains(add(e(0), e(1))));
  CHECK_FALSE(u.contains(e(2)));

  // coords_of returns basis coefficients
  auto c = u.coords_of(sub(e(0), scale(Scalar::of(QQ, 2), e(1))));
  REQUIRE(c.has_value());
  CHECK(*c == vec_of(QQ, {1, -2}));
  CHECK_FALSE(u.coords_of(e(2)).has_value());
}

TEST_CASE("dimension formula holds for random subspace pairs") {
  std::mt19937_64 rng(0x5eed0004);
  for (int trial = 0; trial < 60; ++trial) {
    FieldCtx f = (trial % 2 == 0) ? QQ : F5;
    Subspace u = Subspace::row_space(oracles::random_mat(f, 3, 6, rng));
    Subspace v = Subspace::row_space(oracles::random_mat(f, 2, 6, rng));
    Subspace s = u + v;
    Subspace i = intersect(u, v);
    CHECK(u.dim() + v.dim() == s.dim() + i.dim());
    CHECK(s.contains(u));
    CHECK(s.contains(v));
    CHECK(u.contains(i));
    CHECK(v.contains(i));
    // canonical form: recomputing from the basis is the identity
    CHECK(Subspace::row_space(u.basis()) == u);
  }
}

TEST_CASE("polynomial arithmetic, parsing, printing") {
  Poly f = Poly::parse(F5, "x^2+3x+1");
  CHECK(f.degree() == 2);
  CHECK(f.to_string() == "x^2+3x+1");
  CHECK(f.eval(Scalar::of(F5, 1)) == Scalar::of(F5, 0));  // 1+3+1=5=0

  Poly g = Poly::parse(QQ, "-x+4");
  CHECK(g.to_string() == "-x+4");
  CHECK(Poly::parse(QQ, "x^12+1").degree() == 12);
  CHECK(Poly::parse(QQ, "2x").to_string() == "2x");
  CHECK_THROWS_AS(Poly::parse(QQ, "x^"), Error);
  CHECK_THROWS_AS(Poly::parse(QQ, "3y"), Error);

  // divmod round trip
  Poly a = Poly::parse(F7, "x^5+2x^3+x+6");
  Poly b = Poly::parse(F7, "x^2+3");
  auto [q, r] = a.divmod(b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());

  // derivative in characteristic p kills x^p
  CHECK(Poly::parse(F5, "x^5+x").derivative() == Poly::constant(F5, Scalar::one(F5)));
}

TEST_CASE("poly_factor matches the pinned examples") {
  // x^2+1 = (x+1)^2 over GF(2)
  auto f1 = poly_factor(Poly::parse(F2, "x^2+1"));
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].factor == Poly::parse(F2, "x+1"));
  CHECK(f1[0].multiplicity == 2);

  // x over GF(7) is already irreducible
  auto f2 = poly_factor(Poly::parse(F7, "x"));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].factor == Poly::parse(F7, "x"));
  CHECK(f2[0].multiplicity == 1);

  // x^2+1 = (x+2)(x+3) over GF(5): 2^2 = 4 = -1 and 3^2 = 9 = -1
  auto f3 = poly_factor(Poly::parse(F5, "x^2+1"));
  REQUIRE(f3.size() == 2);
  CHECK(f3[0].factor == Poly::parse(F5, "x+2"));
  CHECK(f3[1].factor == Poly::parse(F5, "x+3"));
  CHECK(f3[0].multiplicity == 1);
  CHECK(f3[1].multiplicity == 1);

  CHECK_THROWS_AS(poly_factor(Poly::zero(F5)), Error);
  CHECK_THROWS_AS(poly_factor(Poly::parse(QQ, "x^2+1")), Error);
}

TEST_CASE("poly_factor agrees with trial division on small random input") {
  std::mt19937_64 rng(0x5eed0005);
  for (FieldCtx f : {F2, FieldCtx::gf(3), F5}) {
    for (int trial = 0; trial < 25; ++trial) {
      Poly p = oracles::random_poly(f, 6, rng);
      if (p.degree() < 1) continue;
      auto fast = poly_factor(p);
      auto slow = oracles::factor_by_trial_division(p);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) {
        CHECK(fast[i].factor == slow[i].factor);
        CHECK(fast[i].multiplicity == slow[i].multiplicity);
      }
      for (const auto& pf : fast) CHECK(oracles::irreducible_by_trial_division(pf.factor));
    }
  }
}

TEST_CASE("poly_factor round-trips on 500 random polynomials up to degree 12") {
  std::mt19937_64 rng(0x5eed0006);
  const std::uint64_t primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 500; ++trial) {
    FieldCtx f = FieldCtx::gf(primes[trial % 4]);
    Poly p = oracles::random_poly(f, 12, rng);
    if (p.degree() < 1) continue;
    auto factors = poly_factor(p);
    Poly prod = Poly::constant(f, Scalar::one(f));
    std::size_t degsum = 0;
    for (const auto& pf : factors) {
      prod = prod * pf.factor.pow(pf.multiplicity);
      degsum += pf.multiplicity * static_cast<std::size_t>(pf.factor.degree());
    }
    CHECK(prod == p.monic());
    CHECK(degsum == static_cast<std::size_t>(p.degree()));
  }
}

TEST_CASE("parallel kernels agree exactly with the serial reference") {
  std::mt19937_64 rng(0x5eed0007);
  for (int trial = 0; trial < 10; ++trial) {
    FieldCtx f = (trial % 2 == 0) ? QQ : F7;
    Mat a = oracles::random_mat(f, 12, 9, rng);
    Mat b = oracles::random_mat(f, 9, 14, rng);
    Mat serial = kernels::mul_serial(a, b);
    Mat parallel = kernels::mul(a, b, kernels::Exec::Parallel);
    CHECK(serial == parallel);
    CHECK(serial == oracles::naive_mul(a, b));

    Mat m = oracles::random_mat(f, 10, 13, rng);
    auto rs = kernels::rref_serial(m);
    auto rp = kernels::rref(m, kernels::Exec::Parallel);
    CHECK(rs.mat == rp.mat);
    CHECK(rs.pivots == rp.pivots);
  }
}
