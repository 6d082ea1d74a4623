#ifndef SOCLELAB_FREDHOLM_HPP
#define SOCLELAB_FREDHOLM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soclelab/algebra.hpp"
#include "soclelab/ideal.hpp"
#include "soclelab/length.hpp"

namespace soclelab {

/// Everything the calculus can say about one element: invertibility flags
/// modulo the socle, the four length quantities, and the two defects. The
/// defects are present exactly when the matching xi and rho are both
/// finite; the weak flags restate finiteness of xi.
struct FredholmReport {
  bool is_fredholm = false;
  bool is_semi_plus = false;
  bool is_semi_minus = false;
  bool is_weak_plus = false;
  bool is_weak_minus = false;
  LengthValue xi_l = LengthValue::infinite();
  LengthValue xi_r = LengthValue::infinite();
  LengthValue rho_l = LengthValue::infinite();
  LengthValue rho_r = LengthValue::infinite();
  std::optional<long long> zeta_l;
  std::optional<long long> zeta_r;
};

/// Invertibility of [a] in A/soc(A), decided by linear solves in the
/// quotient: semi_plus solves x[a] = [1], semi_minus solves [a]x = [1],
/// fredholm needs both. The zero quotient counts as invertible.
/// Requires a semiprime algebra.
bool is_fredholm(const Element& a);
bool is_semi_plus(const Element& a);
bool is_semi_minus(const Element& a);

/// xi_l = len(A/Aa) as a left module, xi_r = len(A/aA) as a right module;
/// rho_l = len(ran(a)) as a right module, rho_r = len(lan(a)) as a left
/// module. Field restrictions of composition_length propagate.
LengthValue xi_l(const Element& a);
LengthValue xi_r(const Element& a);
LengthValue rho_l(const Element& a);
LengthValue rho_r(const Element& a);

/// zeta_l = xi_l - rho_l, present when both are finite; mirrored on the
/// right.
std::optional<long long> zeta_l(const Element& a);
std::optional<long long> zeta_r(const Element& a);

FredholmReport fredholm_report(const Element& a);

/// Outcome of the Fredholm test on a one-sided ideal: either a re-verified
/// complement idempotent p (left ideals: L = A(1-p) = lan(p); right ideals
/// mirrored), or the name of the condition that failed.
struct FredholmIdealResult {
  bool fredholm = false;
  std::optional<IdempotentWitness> witness;  // present exactly when fredholm
  std::string violated;                      // nonempty exactly when not
};

/// Decides L = lan(ran(L)) (mirrored for right ideals) over a semiprime
/// algebra and extracts the complement idempotent from the annihilator's
/// one-sided identity. Every returned witness has been re-verified.
FredholmIdealResult is_fredholm_ideal(const OneSidedIdeal& l);

/// Intersection of two Fredholm left ideals, with an idempotent r such
/// that the intersection equals A(1-r); r generates pA + qA where p, q are
/// the complement idempotents of the inputs. Throws NotFredholm when
/// either input fails the Fredholm test.
std::pair<OneSidedIdeal, IdempotentWitness> intersect_fredholm(const OneSidedIdeal& l,
                                                               const OneSidedIdeal& m);

/// For a Fredholm left ideal: idempotents p_j with every A p_j a maximal
/// left ideal and their intersection exactly L (both re-verified; the
/// quotient by each A p_j is certified simple). Empty list for L = A;
/// nullopt when L is not Fredholm. The p_j arise as 1 - q_j from a
/// greedy minimal-idempotent decomposition of ran(L).
std::optional<std::vector<Element>> maximal_intersection_form(const OneSidedIdeal& l);

/// codim(L + L*) for algebras with involution.
std::size_t delta(const OneSidedIdeal& l);

}  // namespace soclelab

#endif
