#include "soclelab/fredholm.hpp"

#include <utility>

#include "soclelab/error.hpp"
#include "soclelab/families.hpp"
#include "soclelab/module.hpp"

namespace soclelab {

namespace {

enum class Inv { Left, Right };

// Is [a] one-sided invertible in A/soc(A)? Solves x[a] = [1] (Left) or
// [a]x = [1] (Right) in quotient coordinates; the zero quotient counts as
// invertible by the 0 = 1 convention.
bool invertible_mod_socle(const Element& a, Inv side) {
  const AlgebraSC::Ptr& alg = a.algebra();
  Subspace socle = ring_socle(alg);  // throws NotSemiprime otherwise
  QuotientAlgebra q = quotient_algebra(alg, socle);
  if (q.alg->is_zero_algebra()) return true;
  Vec abar = q.projection.apply(a.coords());
  Mat rep = (side == Inv::Left) ? q.alg->right_regular(abar) : q.alg->left_regular(abar);
  return solve(rep, q.alg->unit()).has_value();
}

Subspace principal_space(const AlgebraSC::Ptr& alg, Side side, const Vec& a) {
  Mat rep = (side == Side::Left) ? alg->right_regular(a) : alg->left_regular(a);
  return Subspace::row_space(rep.transpose());
}

}  // namespace

bool is_semi_plus(const Element& a) { return invertible_mod_socle(a, Inv::Left); }
bool is_semi_minus(const Element& a) { return invertible_mod_socle(a, Inv::Right); }
bool is_fredholm(const Element& a) { return is_semi_plus(a) && is_semi_minus(a); }

LengthValue xi_l(const Element& a) {
  return composition_length(quotient_by_ideal(principal_left(a)));
}

LengthValue xi_r(const Element& a) {
  return composition_length(quotient_by_ideal(principal_right(a)));
}

LengthValue rho_l(const Element& a) {
  return composition_length(FDModule::ideal_as_module(ran({a})));
}

LengthValue rho_r(const Element& a) {
  return composition_length(FDModule::ideal_as_module(lan({a})));
}

namespace {

std::optional<long long> defect(const LengthValue& xi, const LengthValue& rho) {
  if (!xi.is_finite() || !rho.is_finite()) return std::nullopt;
  return static_cast<long long>(xi.value()) - static_cast<long long>(rho.value());
}

}  // namespace

std::optional<long long> zeta_l(const Element& a) { return defect(xi_l(a), rho_l(a)); }
std::optional<long long> zeta_r(const Element& a) { return defect(xi_r(a), rho_r(a)); }

FredholmReport fredholm_report(const Element& a) {
  FredholmReport r;
  r.is_semi_plus = is_semi_plus(a);
  r.is_semi_minus = is_semi_minus(a);
  r.is_fredholm = r.is_semi_plus && r.is_semi_minus;
  r.xi_l = xi_l(a);
  r.xi_r = xi_r(a);
  r.rho_l = rho_l(a);
  r.rho_r = rho_r(a);
  r.is_weak_plus = r.xi_l.is_finite();
  r.is_weak_minus = r.xi_r.is_finite();
  r.zeta_l = defect(r.xi_l, r.rho_l);
  r.zeta_r = defect(r.xi_r, r.rho_r);
  return r;
}

FredholmIdealResult is_fredholm_ideal(const OneSidedIdeal& l) {
  const AlgebraSC::Ptr& alg = l.algebra();
  if (!is_semiprime(alg)) {
    fail(Errc::NotSemiprime, "Fredholm ideal test is defined over semiprime algebras only");
  }

  // L is Fredholm iff it is the annihilator of its annihilator (finiteness
  // of rho is automatic in finite dimension).
  OneSidedIdeal ann = (l.side() == Side::Left) ? ran(l) : lan(l);
  OneSidedIdeal back = (l.side() == Side::Left) ? lan(ann) : ran(ann);
  if (!(back.space() == l.space())) {
    FredholmIdealResult out;
    out.fredholm = false;
    out.violated = (l.side() == Side::Left) ? "L != lan(ran(L))" : "L != ran(lan(L))";
    return out;
  }

  auto gen = idempotent_generator(ann);
  if (!gen) {
    FredholmIdealResult out;
    out.fredholm = false;
    out.violated = "annihilator has no idempotent generator";
    return out;
  }

  // Re-verify the complement property before handing the witness out:
  // p = p^2 (checked by idempotent_generator), p in soc, and
  // L = A(1-p) = lan(p) (mirrored for right ideals).
  const Element& p = gen->p;
  if (!ring_socle(alg).contains(p.coords())) {
    fail(Errc::InternalCheckFailed, "complement idempotent escapes the socle");
  }
  Vec one_minus_p = sub(alg->unit(), p.coords());
  if (!(principal_space(alg, l.side(), one_minus_p) == l.space())) {
    fail(Errc::InternalCheckFailed, "A(1-p) does not reproduce the Fredholm ideal");
  }
  IdempotentWitness w{p, IdempotentWitness::Property::ComplementOfFredholm, l};
  if (!w.verify()) {
    fail(Errc::InternalCheckFailed, "complement witness failed re-verification");
  }

  FredholmIdealResult out;
  out.fredholm = true;
  out.witness = std::move(w);
  return out;
}

std::pair<OneSidedIdeal, IdempotentWitness> intersect_fredholm(const OneSidedIdeal& l,
                                                               const OneSidedIdeal& m) {
  if (l.algebra() != m.algebra()) fail(Errc::AlgebraMismatch, "intersection across algebras");
  if (l.side() != Side::Left || m.side() != Side::Left) {
    fail(Errc::SideMismatch, "intersect_fredholm expects two left ideals");
  }
  const AlgebraSC::Ptr& alg = l.algebra();

  FredholmIdealResult rl = is_fredholm_ideal(l);
  FredholmIdealResult rm = is_fredholm_ideal(m);
  if (!rl.fredholm || !rm.fredholm) {
    fail(Errc::NotFredholm, "intersect_fredholm needs two Fredholm ideals");
  }
  const Vec& p = rl.witness->p.coords();
  const Vec& q = rm.witness->p.coords();

  // lan(p) n lan(q) = lan(pA + qA) = lan(r) for the idempotent generating
  // the sum; semiprimeness makes that generator unique.
  Subspace sum = principal_space(alg, Side::Right, p) + principal_space(alg, Side::Right, q);
  auto gen = idempotent_generator(OneSidedIdeal::right(alg, sum));
  if (!gen) fail(Errc::InternalCheckFailed, "pA + qA has no idempotent generator");
  const Element& r = gen->p;

  Subspace meet = intersect(l.space(), m.space());
  Vec one_minus_r = sub(alg->unit(), r.coords());
  if (!(principal_space(alg, Side::Left, one_minus_r) == meet)) {
    fail(Errc::InternalCheckFailed, "A(1-r) does not reproduce the intersection");
  }
  OneSidedIdeal out = OneSidedIdeal::left(alg, meet);
  IdempotentWitness w{r, IdempotentWitness::Property::ComplementOfFredholm, out};
  if (!w.verify()) {
    fail(Errc::InternalCheckFailed, "intersection witness failed re-verification");
  }
  return {std::move(out), std::move(w)};
}

std::optional<std::vector<Element>> maximal_intersection_form(const OneSidedIdeal& l) {
  if (l.side() != Side::Left) {
    fail(Errc::SideMismatch, "maximal intersection form expects a left ideal");
  }
  const AlgebraSC::Ptr& alg = l.algebra();

  FredholmIdealResult fr = is_fredholm_ideal(l);
  if (!fr.fredholm) return std::nullopt;

  // Greedy minimal-idempotent decomposition ran(L) = q_1 A + ... + q_n A
  // (a direct sum by construction), giving L = lan(ran(L)) as the
  // intersection of the lan(q_j) = A(1 - q_j).
  std::vector<Element> ps;
  Subspace current = ran(l).space();
  std::size_t peel = 0;
  while (!current.is_zero()) {
    OneSidedIdeal cur = OneSidedIdeal::right(alg, current);
    OneSidedIdeal w = minimal_subideal(cur, 0x66726d78ull + peel);
    auto gen = idempotent_generator(w);
    if (!gen) fail(Errc::InternalCheckFailed, "minimal ideal without idempotent generator");
    const Vec& q = gen->p.coords();

    Vec one_minus_q = sub(alg->unit(), q);
    Subspace next = intersect(current, principal_space(alg, Side::Right, one_minus_q));
    if (next.dim() + w.dim() != current.dim()) {
      fail(Errc::InternalCheckFailed, "minimal peel is not a direct summand");
    }
    current = next;
    ++peel;
    ps.push_back(Element(alg, one_minus_q));
  }

  // Re-verify both halves of the claim: each A p_j is maximal (certified
  // simple quotient), and the intersection is exactly L.
  Subspace meet = Subspace::full(alg->field(), alg->dim());
  for (const Element& p : ps) {
    OneSidedIdeal lp = principal_left(p);
    FDModule quo = quotient_by_ideal(lp);
    if (quo.dim() == 0 || !simple_submodule(quo).is_full()) {
      fail(Errc::InternalCheckFailed, "A p_j is not a maximal left ideal");
    }
    meet = intersect(meet, lp.space());
  }
  if (!(meet == l.space())) {
    fail(Errc::InternalCheckFailed, "maximal intersection does not reproduce L");
  }
  return ps;
}

std::size_t delta(const OneSidedIdeal& l) {
  const AlgebraSC::Ptr& alg = l.algebra();
  if (!alg->has_involution()) {
    fail(Errc::MissingInvolution, "delta needs an involution");
  }
  std::vector<Vec> starred;
  for (std::size_t r = 0; r < l.dim(); ++r) {
    starred.push_back(alg->star_coords(l.space().basis().row(r)));
  }
  Subspace sum = l.space() + Subspace::span(alg->field(), alg->dim(), starred);
  return alg->dim() - sum.dim();
}

}  // namespace soclelab
