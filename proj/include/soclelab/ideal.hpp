#ifndef SOCLELAB_IDEAL_HPP
#define SOCLELAB_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "soclelab/algebra.hpp"
#include "soclelab/length.hpp"

namespace soclelab {

enum class Side { Left, Right };

/// One-sided ideal of an algebra, carried as a coordinate subspace.
/// Construction validates closure under the declared side's multiplication
/// on every basis pair, so a held value is always an actual ideal.
class OneSidedIdeal {
 public:
  static OneSidedIdeal left(AlgebraSC::Ptr alg, Subspace space);
  static OneSidedIdeal right(AlgebraSC::Ptr alg, Subspace space);

  Side side() const { return side_; }
  const Subspace& space() const { return space_; }
  const AlgebraSC::Ptr& algebra() const { return alg_; }
  std::size_t dim() const { return space_.dim(); }
  bool is_zero() const { return space_.is_zero(); }
  bool is_full() const { return space_.is_full(); }

  friend bool operator==(const OneSidedIdeal& a, const OneSidedIdeal& b) {
    return a.side_ == b.side_ && a.alg_ == b.alg_ && a.space_ == b.space_;
  }

 private:
  OneSidedIdeal(Side s, AlgebraSC::Ptr a, Subspace sp)
      : side_(s), alg_(std::move(a)), space_(std::move(sp)) {}
  Side side_;
  AlgebraSC::Ptr alg_;
  Subspace space_;
};

/// Idempotent with a machine-checked role. verify() re-runs the defining
/// checks against the stored context ideal.
struct IdempotentWitness {
  enum class Property { GeneratesIdeal, ComplementOfFredholm, MinimalIdempotent };
  Element p;
  Property property;
  OneSidedIdeal context;

  bool verify() const;
};

/// Aa = image of right multiplication; aA = image of left multiplication.
OneSidedIdeal principal_left(const Element& a);
OneSidedIdeal principal_right(const Element& a);
OneSidedIdeal principal_left(const AlgebraSC::Ptr& alg, const Vec& a);
OneSidedIdeal principal_right(const AlgebraSC::Ptr& alg, const Vec& a);

/// Left annihilator {a : as = 0 for all s} and right annihilator
/// {a : sa = 0 for all s}; S must be nonempty and share one algebra.
OneSidedIdeal lan(const std::vector<Element>& s);
OneSidedIdeal ran(const std::vector<Element>& s);
OneSidedIdeal lan(const AlgebraSC::Ptr& alg, const std::vector<Vec>& s);
OneSidedIdeal ran(const AlgebraSC::Ptr& alg, const std::vector<Vec>& s);

/// Annihilators of a whole ideal (of every element of its basis); the zero
/// ideal annihilates to the full algebra.
OneSidedIdeal lan(const OneSidedIdeal& l);
OneSidedIdeal ran(const OneSidedIdeal& l);

/// Solves for a one-sided identity e of the ideal: e in the space with
/// v*e = v (left ideals) or e*v = v (right ideals) on every basis row.
/// When consistent, e is idempotent and generates the ideal (both
/// re-verified before returning); absence means no such generator exists.
std::optional<IdempotentWitness> idempotent_generator(const OneSidedIdeal& l);

/// Jacobson radical via the trace bilinear form of the left regular
/// representation; valid in characteristic 0 or p > dim. Memoized.
const Subspace& dickson_radical(const AlgebraSC::Ptr& a);

bool is_semiprime(const AlgebraSC::Ptr& a);

/// soc(A) for semiprime finite-dimensional A: the full space (such an
/// algebra is semisimple). Throws NotSemiprime otherwise.
Subspace ring_socle(const AlgebraSC::Ptr& a);

/// A minimal nonzero subideal of L, found by descending through proper
/// subideals (deterministic basis pre-pass, then seeded kernel search in
/// pAp, then an exhaustive scan at small sizes). Deterministic for a fixed
/// seed; ChopInconclusive when no certificate is reachable.
OneSidedIdeal minimal_subideal(const OneSidedIdeal& l, std::uint64_t seed);

/// Minimal number of minimal one-sided ideals summing to L, by greedy
/// peeling: split off Ap for a minimal idempotent p, recurse on the
/// complement L n A(1-p). Requires a semiprime algebra.
LengthValue order(const OneSidedIdeal& l);

}  // namespace soclelab

#endif
