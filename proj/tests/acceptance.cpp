// Acceptance gate: thirteen numbered criteria, one PASS/FAIL line each,
// exit code = number of failures. Everything is exact arithmetic, so there
// are no numeric tolerances anywhere — equality means equality. The only
// thresholds are the pinned wall-clock budgets and case counts below.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "soclelab/algebra.hpp"
#include "soclelab/barnes.hpp"
#include "soclelab/error.hpp"
#include "soclelab/families.hpp"
#include "soclelab/fredholm.hpp"
#include "soclelab/ideal.hpp"
#include "soclelab/module.hpp"
#include "soclelab/poly.hpp"
#include "soclelab/polymodel.hpp"
#include "soclelab/specfile.hpp"
#include "soclelab/suites.hpp"

using namespace soclelab;
using Clock = std::chrono::steady_clock;

namespace {

const FieldCtx F17 = FieldCtx::gf(17);
const FieldCtx F19 = FieldCtx::gf(19);
const FieldCtx QQ = FieldCtx::rationals();

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- sampling helpers ------------------------------------------------------

Vec random_sparse(const AlgebraSC::Ptr& a, std::mt19937_64& rng) {
  Vec v = zero_vec(a->field(), a->dim());
  std::size_t terms = 1 + rng() % 3;
  for (std::size_t t = 0; t < terms; ++t) {
    long long c = a->field().is_rationals()
                      ? static_cast<long long>(rng() % 9) - 4
                      : static_cast<long long>(rng() % a->field().characteristic());
    v[rng() % a->dim()] = Scalar::of(a->field(), c);
  }
  return v;
}

OneSidedIdeal random_ideal(const AlgebraSC::Ptr& a, std::mt19937_64& rng, Side side) {
  auto make = [&](const Subspace& sp) {
    return side == Side::Left ? OneSidedIdeal::left(a, sp) : OneSidedIdeal::right(a, sp);
  };
  auto principal_space = [&](const Vec& v) {
    return side == Side::Left ? principal_left(a, v).space() : principal_right(a, v).space();
  };
  switch (rng() % 8) {
    case 0:
      return make(Subspace::zero(a->field(), a->dim()));
    case 1:
      return make(Subspace::full(a->field(), a->dim()));
    default: {
      Subspace sp = principal_space(random_sparse(a, rng));
      if (rng() % 2 == 0) sp = sp + principal_space(random_sparse(a, rng));
      return make(sp);
    }
  }
}

// Matrix, product and group algebras over one prime field. F[c7] over GF(17)
// or GF(19) has a 6-dimensional simple component whose certification scan is
// past the budget, so c7 stays out (the honest-refusal path has its own test).
std::vector<AlgebraSC::Ptr> matrix_family(FieldCtx f) {
  return {matrix_algebra(1, f), matrix_algebra(2, f), matrix_algebra(3, f)};
}
std::vector<AlgebraSC::Ptr> product_family(FieldCtx f) {
  return {direct_product(matrix_algebra(1, f), matrix_algebra(1, f)),
          direct_product(matrix_algebra(2, f), matrix_algebra(1, f)),
          direct_product(matrix_algebra(2, f), matrix_algebra(2, f)),
          direct_product(matrix_algebra(3, f), matrix_algebra(2, f))};
}
std::vector<AlgebraSC::Ptr> group_family(FieldCtx f) {
  std::vector<AlgebraSC::Ptr> out;
  for (std::size_t n : {2, 3, 4, 5, 6, 8}) {
    out.push_back(group_algebra(cyclic_group_table(n), f, "F[c" + std::to_string(n) + "]"));
  }
  out.push_back(group_algebra(klein_four_table(), f, "F[klein]"));
  out.push_back(group_algebra(symmetric3_table(), f, "F[s3]"));
  out.push_back(group_algebra(dihedral4_table(), f, "F[d4]"));
  out.push_back(group_algebra(quaternion_table(), f, "F[q8]"));
  return out;
}
std::vector<AlgebraSC::Ptr> semiprime_pool(FieldCtx f) {
  std::vector<AlgebraSC::Ptr> out = matrix_family(f);
  for (auto& a : product_family(f)) out.push_back(a);
  for (auto& a : group_family(f)) out.push_back(a);
  return out;
}

LengthValue xi_of(const OneSidedIdeal& l) {
  return composition_length(quotient_by_ideal(l));
}
LengthValue rho_of(const OneSidedIdeal& l) {
  OneSidedIdeal ann = l.side() == Side::Left ? ran(l) : lan(l);
  return composition_length(FDModule::ideal_as_module(ann));
}

// ---- acceptance bookkeeping ------------------------------------------------

int g_failures = 0;

void report(int num, const std::string& label, const std::optional<std::string>& fail_detail,
            const std::string& pass_detail) {
  if (fail_detail) {
    ++g_failures;
    std::printf("FAIL %2d/13 %s: %s\n", num, label.c_str(), fail_detail->c_str());
  } else {
    std::printf("PASS %2d/13 %s: %s\n", num, label.c_str(), pass_detail.c_str());
  }
  std::fflush(stdout);
}

struct SampledIdeal {
  AlgebraSC::Ptr alg;
  OneSidedIdeal ideal;
};

std::vector<SampledIdeal> g_crit1_ideals;  // shared by criteria 1-3

// ---- criteria ----------------------------------------------------------------

void criterion_1() {
  const double budget_s = 60.0;
  auto t0 = Clock::now();
  std::mt19937_64 rng(0xacce9701ull);
  std::optional<std::string> fail;
  int count = 0;
  for (const auto& alg : semiprime_pool(F17)) {
    for (int t = 0; t < 12 && !fail; ++t) {
      Side side = (t % 2 == 0) ? Side::Left : Side::Right;
      OneSidedIdeal l = random_ideal(alg, rng, side);
      g_crit1_ideals.push_back({alg, l});
      ++count;
      LengthValue ord = order(l);
      LengthValue len = composition_length(FDModule::ideal_as_module(l));
      if (!(ord == len)) {
        fail = alg->name() + ": order " + ord.to_string() + " != length " + len.to_string();
      }
    }
  }
  double secs = seconds_since(t0);
  if (!fail && count < 200) fail = "only " + std::to_string(count) + " ideals sampled";
  if (!fail && secs > budget_s) {
    fail = "took " + std::to_string(secs) + " s (budget 60 s)";
  }
  std::ostringstream ok;
  ok << count << " random ideals (both sides) across " << semiprime_pool(F17).size()
     << " algebras over GF(17), order == composition length, " << secs << " s";
  report(1, "order-equals-length", fail, ok.str());
}

void criterion_2() {
  std::optional<std::string> fail;
  int fredholm_count = 0;
  for (const auto& [alg, l] : g_crit1_ideals) {
    if (fail) break;
    FredholmIdealResult res = is_fredholm_ideal(l);
    if (!res.fredholm) continue;  // criterion covers the Fredholm ones found
    ++fredholm_count;
    const IdempotentWitness& w = *res.witness;
    if (!(w.p * w.p == w.p)) {
      fail = alg->name() + ": witness is not idempotent";
    } else if (!w.verify()) {
      fail = alg->name() + ": witness re-verification failed";
    } else {
      Element q = Element::unit(alg) - w.p;
      Subspace back =
          l.side() == Side::Left ? principal_left(q).space() : principal_right(q).space();
      if (!(back == l.space())) fail = alg->name() + ": A(1-p) != L";
    }
  }
  if (!fail && fredholm_count == 0) fail = "no Fredholm ideals found at all";
  report(2, "complement-idempotents", fail,
         "p^2 = p and A(1-p) = L verified on all " + std::to_string(fredholm_count) +
             " Fredholm ideals from criterion 1");
}

void criterion_3() {
  std::optional<std::string> fail;
  // finite-dimensional part: xi = rho on every criterion-1 ideal
  for (const auto& [alg, l] : g_crit1_ideals) {
    LengthValue xi = xi_of(l), rho = rho_of(l);
    if (!(xi == rho)) {
      fail = alg->name() + ": xi " + xi.to_string() + " != rho " + rho.to_string();
      break;
    }
  }

  // scalar-plus-block part: all four lengths equal the nullity of the
  // shifted block, recomputed here from the raw pre-trim construction data
  int barnes_count = 0;
  if (!fail) {
    std::mt19937_64 rng(0xacce9703ull);
    const FieldCtx fields[3] = {F17, F19, QQ};
    for (int t = 0; t < 100 && !fail; ++t) {
      FieldCtx f = fields[t % 3];
      std::size_t n = 1 + rng() % 8;
      long long lam_i = 1 + static_cast<long long>(rng() % 7);
      Scalar lam = Scalar::of(f, lam_i);
      Mat raw(f, n, n);
      if (rng() % 2 == 0) {
        // plant a kernel: raw + lam*I has rank at most r < n
        std::size_t r = rng() % n;
        Mat a(f, n, r), b(f, r, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < r; ++j) a.at(i, j) = Scalar::of(f, (long long)(rng() % 5) - 2);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < n; ++j) b.at(i, j) = Scalar::of(f, (long long)(rng() % 5) - 2);
        raw = a * b;
        for (std::size_t i = 0; i < n; ++i) raw.at(i, i) -= lam;
      } else {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            raw.at(i, j) = Scalar::of(f, (long long)(rng() % 5) - 2);
      }
      Mat shifted = raw + Mat::identity(f, n).scaled(lam);
      std::size_t nullity = n - rank(shifted);
      BarnesElement el(lam, raw);
      ++barnes_count;
      for (LengthValue got : {b_xi_l(el), b_xi_r(el), b_rho_l(el), b_rho_r(el)}) {
        if (!(got == LengthValue::finite(nullity))) {
          fail = "scalar-plus-block: a length is " + got.to_string() + ", nullity oracle " +
                 std::to_string(nullity);
          break;
        }
      }
    }
  }
  report(3, "xi-equals-rho", fail,
         "xi = rho on all " + std::to_string(g_crit1_ideals.size()) +
             " criterion-1 ideals; all four lengths = kernel dimension on " +
             std::to_string(barnes_count) + " scalar-plus-block elements (3 fields)");
}

void criterion_4() {
  std::optional<std::string> fail;
  std::mt19937_64 rng(0xacce9704ull);
  int count = 0;
  auto run_family = [&](const std::vector<AlgebraSC::Ptr>& fam, int per_family) {
    for (int t = 0; t < per_family && !fail; ++t) {
      const auto& alg = fam[t % fam.size()];
      OneSidedIdeal l = random_ideal(alg, rng, Side::Left);
      ++count;

      // (i) the ideal contains a Fredholm element (probe 0 and basis rows)
      bool has_elt = is_fredholm(Element::zero(alg));
      for (std::size_t r = 0; r < l.dim() && !has_elt; ++r) {
        has_elt = is_fredholm(Element(alg, l.space().basis().row(r)));
      }
      // (ii) the double-annihilator test
      bool ideal_flag = is_fredholm_ideal(l).fredholm;
      // (iii) a maximal intersection form exists
      auto form = maximal_intersection_form(l);

      if (has_elt != ideal_flag || ideal_flag != form.has_value()) {
        fail = alg->name() + ": equivalence flags disagree (" + std::to_string(has_elt) +
               "," + std::to_string(ideal_flag) + "," + std::to_string(form.has_value()) + ")";
      } else if (form) {
        Subspace meet = Subspace::full(alg->field(), alg->dim());
        for (const Element& pj : *form) meet = intersect(meet, principal_left(pj).space());
        if (!(meet == l.space())) fail = alg->name() + ": intersection of A p_j != L";
      }
    }
  };
  run_family(matrix_family(F17), 100);
  run_family(product_family(F17), 100);
  run_family(group_family(F17), 100);
  report(4, "ideal-test-equivalence", fail,
         "element / double-annihilator / intersection-form tests agree on " +
             std::to_string(count) + " left ideals (100 per family), forms re-verified");
}

void criterion_5() {
  std::optional<std::string> fail;
  std::mt19937_64 rng(0xacce9705ull);
  int count = 0;
  auto pool = semiprime_pool(F17);
  for (const auto& alg : pool) {
    for (int t = 0; t < 6 && !fail; ++t) {
      OneSidedIdeal l = random_ideal(alg, rng, Side::Left);
      OneSidedIdeal m = random_ideal(alg, rng, Side::Left);
      if (!is_fredholm_ideal(l).fredholm || !is_fredholm_ideal(m).fredholm) continue;
      ++count;
      auto [meet, w] = intersect_fredholm(l, m);
      if (!(meet.space() == intersect(l.space(), m.space()))) {
        fail = alg->name() + ": intersection space mismatch";
      } else if (!w.verify()) {
        fail = alg->name() + ": witness failed re-verification";
      } else if (!(principal_left(Element::unit(alg) - w.p).space() == meet.space())) {
        fail = alg->name() + ": A(1-r) != L n L'";
      }
    }
  }
  if (!fail && count < 100) fail = "only " + std::to_string(count) + " Fredholm pairs";
  report(5, "fredholm-intersection", fail,
         "A(1-r) = L n L' with certified r on " + std::to_string(count) + " Fredholm pairs");
}

void criterion_6() {
  std::optional<std::string> fail;
  std::mt19937_64 rng(0xacce9706ull);
  int positives = 0, negatives = 0;
  std::vector<AlgebraSC::Ptr> pool = semiprime_pool(F17);
  pool.push_back(upper_triangular_algebra(2, F17));
  pool.push_back(upper_triangular_algebra(3, F17));
  for (const auto& alg : pool) {
    for (int t = 0; t < 6 && !fail; ++t) {
      OneSidedIdeal l = random_ideal(alg, rng, Side::Left);
      bool semis = is_semisimple_module(quotient_by_ideal(l));
      auto w = semi_maximal_witness(l);
      if (semis != w.has_value()) {
        fail = alg->name() + ": witness presence disagrees with semisimplicity";
        break;
      }
      if (!w) {
        ++negatives;
        continue;
      }
      ++positives;
      LengthValue xi = xi_of(l);
      if (!xi.is_finite() || w->size() > xi.value()) {
        fail = alg->name() + ": more maximal ideals than the quotient length";
        break;
      }
      Subspace meet = Subspace::full(alg->field(), alg->dim());
      for (const OneSidedIdeal& mi : *w) {
        meet = intersect(meet, mi.space());
        if (!(composition_length(quotient_by_ideal(mi)) == LengthValue::finite(1))) {
          fail = alg->name() + ": a witness ideal is not maximal";
        }
      }
      if (!fail && !(meet == l.space())) fail = alg->name() + ": intersection != L";
    }
  }
  if (!fail && (positives == 0 || negatives == 0)) {
    fail = "need both directions observed (got " + std::to_string(positives) + " with, " +
           std::to_string(negatives) + " without)";
  }
  report(6, "semisimple-quotient-equivalence", fail,
         std::to_string(positives) + " semisimple quotients with verified witnesses, " +
             std::to_string(negatives) + " non-semisimple with none");
}

void criterion_7() {
  std::optional<std::string> fail;
  std::mt19937_64 rng(0xacce9707ull);
  const FieldCtx fields[3] = {F17, F19, QQ};
  auto random_el = [&](FieldCtx f, bool nonzero_lambda) {
    long long lam = static_cast<long long>(rng() % 5) - 2;
    if (nonzero_lambda && lam == 0) lam = 1;
    std::size_t n = rng() % 4;
    Mat block(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        block.at(i, j) = Scalar::of(f, (long long)(rng() % 5) - 2);
    return BarnesElement(Scalar::of(f, lam), block);
  };

  int witnesses = 0;
  for (int t = 0; t < 260 && witnesses < 200 && !fail; ++t) {
    FieldCtx f = fields[t % 3];
    BarnesElement a = random_el(f, t % 4 == 0);
    if (a.is_zero()) continue;
    BarnesElement e = b_essential_socle_witness(a);
    if (!b_is_socle(e) || b_mul(e, e) != e) {
      fail = "witness is not a socle idempotent";
    } else if (b_mul(a, e).is_zero()) {
      fail = "witness product vanished";
    }
    ++witnesses;
  }
  if (!fail && witnesses < 200) fail = "only " + std::to_string(witnesses) + " witnesses";

  int compared = 0;
  for (int t = 0; t < 100 && !fail; ++t) {
    FieldCtx f = fields[t % 3];
    BarnesElement a = random_el(f, true);
    LengthValue xl = b_xi_l(a), rl = b_rho_l(a), xr = b_xi_r(a), rr = b_rho_r(a);
    if (!(rl.value() <= xl.value()) || !(rl == xl) || !(rr == xr)) {
      fail = "rho/xi mismatch off the socle";
    }
    ++compared;
  }
  report(7, "essential-socle", fail,
         std::to_string(witnesses) + " nonzero elements got socle witnesses with a*e != 0; rho "
         "= xi on " + std::to_string(compared) + " Fredholm samples");
}

void criterion_8() {
  std::optional<std::string> fail;
  std::mt19937_64 rng(0xacce9708ull);
  std::vector<AlgebraSC::Ptr> pool = semiprime_pool(F17);
  pool.push_back(upper_triangular_algebra(2, F17));
  pool.push_back(upper_triangular_algebra(3, F17));

  auto random_module = [&](const AlgebraSC::Ptr& alg) {
    for (int tries = 0; tries < 8; ++tries) {
      FDModule m = [&] {
        switch (rng() % 3) {
          case 0:
            return FDModule::regular(alg);
          case 1:
            return quotient_by_ideal(random_ideal(alg, rng, Side::Left));
          default:
            return FDModule::ideal_as_module(random_ideal(alg, rng, Side::Left));
        }
      }();
      if (m.dim() <= 9) return m;
    }
    return quotient_by_ideal(OneSidedIdeal::left(alg, Subspace::full(F17, alg->dim())));
  };
  auto random_map = [&](const FDModule& src, const FDModule& tgt) {
    std::vector<ModuleMap> basis = hom_space(src, tgt);
    Mat m(F17, tgt.dim(), src.dim());
    for (const ModuleMap& h : basis) {
      m = m + h.matrix().scaled(Scalar::of_residue(F17, rng() % 17));
    }
    return ModuleMap(src, tgt, m);
  };

  int count = 0;
  for (const auto& alg : pool) {
    for (int t = 0; t < 11 && !fail; ++t) {
      FDModule m1 = random_module(alg), m2 = random_module(alg), m3 = random_module(alg);
      ModuleMap f = random_map(m1, m2);
      ModuleMap g = random_map(m2, m3);
      auto i1 = module_map_index(f), i2 = module_map_index(g),
           ic = module_map_index(g.compose(f));
      if (!i1 || !i2 || !ic) {
        fail = alg->name() + ": an index came back undefined";
      } else if (*ic != *i1 + *i2) {
        fail = alg->name() + ": ind(gf) = " + std::to_string(*ic) + " but ind(g)+ind(f) = " +
               std::to_string(*i1 + *i2);
      }
      ++count;
    }
  }
  if (!fail && count < 200) fail = "only " + std::to_string(count) + " pairs";
  report(8, "index-additivity", fail,
         "ind(g o f) = ind(g) + ind(f) exactly on " + std::to_string(count) +
             " composable pairs over GF(17), controls included");
}

void criterion_9() {
  std::optional<std::string> fail;
  std::mt19937_64 rng(0xacce9709ull);

  int poly_pairs = 0;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    FieldCtx f = FieldCtx::gf(p);
    for (int t = 0; t < 125 && !fail; ++t) {
      auto rand_poly = [&] {
        int d = static_cast<int>(rng() % 13);
        std::vector<Scalar> c;
        for (int i = 0; i < d; ++i) c.push_back(Scalar::of_residue(f, rng() % p));
        c.push_back(Scalar::of_residue(f, 1 + rng() % (p - 1)));
        return Poly(f, std::move(c));
      };
      Poly a = rand_poly(), b = rand_poly();
      auto za = p_zeta(a), zb = p_zeta(b), zab = p_zeta(a * b);
      if (!za || !zb || !zab || *zab != *za + *zb) {
        fail = "GF(" + std::to_string(p) + "): zeta(fg) != zeta(f)+zeta(g)";
      }
      ++poly_pairs;
    }
  }

  int findim_pairs = 0;
  if (!fail) {
    for (const auto& alg : semiprime_pool(F17)) {
      for (int t = 0; t < 3 && !fail; ++t) {
        Element a(alg, random_sparse(alg, rng)), b(alg, random_sparse(alg, rng));
        auto za = zeta_l(a), zb = zeta_l(b), zab = zeta_l(a * b);
        if (za != 0 || zb != 0 || zab != 0) {
          fail = alg->name() + ": a defect is nonzero over a semisimple algebra";
        } else {
          ++findim_pairs;  // identity holds with every term zero
        }
      }
    }
  }

  int barnes_pairs = 0;
  if (!fail) {
    for (int t = 0; t < 30 && !fail; ++t) {
      FieldCtx f = (t % 2 == 0) ? F17 : QQ;
      std::size_t n = 1 + rng() % 3;
      auto rand_el = [&] {
        Mat block(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            block.at(i, j) = Scalar::of(f, (long long)(rng() % 5) - 2);
        return BarnesElement(Scalar::of(f, 1 + (long long)(rng() % 3)), block);
      };
      BarnesElement a = rand_el(), b = rand_el();
      if (b_zeta_l(a) != 0 || b_zeta_l(b) != 0 || b_zeta_l(b_mul(a, b)) != 0) {
        fail = "scalar-plus-block: nonzero defect off the socle";
      }
      ++barnes_pairs;
    }
  }
  report(9, "defect-additivity", fail,
         std::to_string(poly_pairs) + " polynomial pairs over GF(2,3,5,7) exact; " +
             std::to_string(findim_pairs) + " semisimple pairs and " +
             std::to_string(barnes_pairs) + " scalar-plus-block pairs, all terms zero");
}

void criterion_10() {
  std::optional<std::string> fail;
  std::mt19937_64 rng(0xacce970aull);
  int gap_cases = 0;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    FieldCtx f = FieldCtx::gf(p);
    for (int t = 0; t < 25 && !fail; ++t) {
      int d = 1 + static_cast<int>(rng() % 8);
      std::vector<Scalar> c;
      for (int i = 0; i < d; ++i) c.push_back(Scalar::of_residue(f, rng() % p));
      c.push_back(Scalar::of_residue(f, 1 + rng() % (p - 1)));
      Poly s(f, std::move(c));

      std::size_t omega = factor_count(s);
      LengthValue xi = p_xi(s);
      auto zeta = p_zeta(s);
      if (!xi.is_finite() || xi.value() != omega) {
        fail = "xi != factor count";
      } else if (p_is_fredholm(s)) {
        fail = "a non-constant polynomial tested Fredholm";
      } else if (!zeta || *zeta != static_cast<long long>(omega) || *zeta < 1) {
        fail = "zeta != omega >= 1";
      }
      ++gap_cases;
    }
  }

  int root_cases = 0;
  if (!fail) {
    for (std::uint64_t p : {2ull, 5ull}) {
      FieldCtx f = FieldCtx::gf(p);
      for (int t = 0; t < 50 && !fail; ++t) {
        int d = static_cast<int>(rng() % 5);
        std::vector<Scalar> c;
        for (int i = 0; i < d; ++i) c.push_back(Scalar::of_residue(f, rng() % p));
        c.push_back(Scalar::of_residue(f, 1 + rng() % (p - 1)));
        Poly s(f, std::move(c));
        std::size_t n = 1 + rng() % 5;
        if (!p_verify_root_divisibility(s, n)) fail = "root divisibility violated";
        ++root_cases;
      }
    }
  }
  report(10, "weak-fredholm-gap", fail,
         "xi = omega < infinity, not Fredholm, zeta >= 1 on " + std::to_string(gap_cases) +
             " polynomials; root divisibility on " + std::to_string(root_cases) + " (s, n)");
}

void criterion_11() {
  std::optional<std::string> fail;
  std::mt19937_64 rng(0xacce970bull);
  int pairs = 0;
  std::vector<AlgebraSC::Ptr> pool = semiprime_pool(F17);
  for (auto& a : semiprime_pool(F19)) pool.push_back(a);
  pool.push_back(matrix_algebra(2, QQ));
  pool.push_back(group_algebra(cyclic_group_table(4), QQ, "F[c4]"));
  pool.push_back(group_algebra(klein_four_table(), QQ, "F[klein]"));

  for (const auto& alg : pool) {
    if (!alg->has_involution()) continue;
    for (int t = 0; t < 3 && !fail; ++t) {
      OneSidedIdeal l1 = random_ideal(alg, rng, Side::Left);
      Subspace bigger = l1.space() + principal_left(alg, random_sparse(alg, rng)).space();
      OneSidedIdeal l2 = OneSidedIdeal::left(alg, bigger);
      if (delta(l2) > delta(l1)) {
        fail = alg->name() + ": delta grew on a larger ideal";
      }
      ++pairs;
    }
  }
  if (!fail && pairs < 100) fail = "only " + std::to_string(pairs) + " nested pairs";

  // the equality converse stays observational: it must never gate
  if (!fail) {
    SuiteReport obs = run_suite("delta-equality", 42);
    if (obs.verdict != "experimental-observation") {
      fail = "delta-equality suite is not marked experimental";
    } else if (!all_passed({obs})) {
      fail = "an experimental suite affected the gate";
    }
  }
  report(11, "delta-antitone", fail,
         "delta(L2) <= delta(L1) on " + std::to_string(pairs) +
             " nested pairs (GF(17), GF(19), QQ); equality converse kept observational");
}

void criterion_12() {
  std::optional<std::string> fail;
  std::mt19937_64 rng(0xacce970cull);
  int attempts = 0, refusals = 0;
  for (FieldCtx f : {F17, QQ}) {
    for (std::size_t n : {2, 3}) {
      auto alg = upper_triangular_algebra(n, f);
      auto count = [&](auto&& fn) {
        ++attempts;
        try {
          fn();
        } catch (const Error& e) {
          if (e.code() == Errc::NotSemiprime) ++refusals;
        }
      };
      for (int t = 0; t < 5; ++t) {
        Element a(alg, random_sparse(alg, rng));
        OneSidedIdeal l = random_ideal(alg, rng, Side::Left);
        OneSidedIdeal m = random_ideal(alg, rng, Side::Left);
        count([&] { ring_socle(alg); });
        count([&] { order(l); });
        count([&] { is_fredholm(a); });
        count([&] { is_semi_plus(a); });
        count([&] { is_semi_minus(a); });
        count([&] { fredholm_report(a); });
        count([&] { is_fredholm_ideal(l); });
        count([&] { intersect_fredholm(l, m); });
        count([&] { maximal_intersection_form(l); });
      }
    }
  }
  if (refusals != attempts) {
    fail = std::to_string(attempts - refusals) + " of " + std::to_string(attempts) +
           " gated calls did not refuse";
  }
  // the radical itself is exact: dim rad T2 = 1 over both fields
  if (!fail) {
    for (FieldCtx f : {F17, QQ}) {
      if (dickson_radical(upper_triangular_algebra(2, f)).dim() != 1) {
        fail = "dim rad(T2) != 1";
      }
    }
  }
  report(12, "non-semiprime-controls", fail,
         "all " + std::to_string(attempts) +
             " gated calls on triangular algebras refused with NotSemiprime; dim rad(T2) = 1");
}

void criterion_13() {
#ifndef SOCLELAB_CLI_PATH
  report(13, "suite-determinism", std::string("CLI path not compiled in"), "");
#else
  const double budget_s = 300.0;
  const std::string cli = SOCLELAB_CLI_PATH;
  const std::string out_a = "/tmp/soclelab_accept_a.json";
  const std::string out_b = "/tmp/soclelab_accept_b.json";
  std::optional<std::string> fail;

  auto run_once = [&](const std::string& out) -> std::optional<double> {
    std::string cmd =
        "\"" + cli + "\" suite --name all --seed 42 --out " + out + " > /dev/null 2>&1";
    auto t0 = Clock::now();
    int rc = std::system(cmd.c_str());
    double secs = seconds_since(t0);
    if (rc != 0) {
      fail = "suite run exited nonzero (" + std::to_string(rc) + ")";
      return std::nullopt;
    }
    return secs;
  };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  double secs_a = 0, secs_b = 0;
  if (auto s = run_once(out_a)) secs_a = *s;
  if (!fail) {
    if (auto s = run_once(out_b)) secs_b = *s;
  }
  std::string ja, jb;
  if (!fail) {
    ja = slurp(out_a);
    jb = slurp(out_b);
    if (ja.empty()) {
      fail = "first run produced no output file";
    } else if (ja != jb) {
      fail = "the two runs differ byte-for-byte";
    } else if (secs_a > budget_s || secs_b > budget_s) {
      fail = "a full run took " + std::to_string(std::max(secs_a, secs_b)) +
             " s (budget 300 s)";
    }
  }
  std::remove(out_a.c_str());
  std::remove(out_b.c_str());
  std::ostringstream ok;
  ok << "two full suite runs (seed 42) byte-identical, " << secs_a << " s and " << secs_b
     << " s";
  report(13, "suite-determinism", fail, ok.str());
#endif
}

}  // namespace

int main() {
  std::printf("acceptance gate: 13 criteria, exact arithmetic, no tolerances\n");
  auto t0 = Clock::now();
  try {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
  } catch (const std::exception& e) {
    std::printf("FAIL --/13 aborted by unexpected exception: %s\n", e.what());
    ++g_failures;
  }
  std::printf("%d/13 criteria passed in %.1f s\n", 13 - g_failures, seconds_since(t0));
  return g_failures;
}
