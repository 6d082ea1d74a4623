#ifndef SOCLELAB_MODULE_HPP
#define SOCLELAB_MODULE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "soclelab/algebra.hpp"
#include "soclelab/ideal.hpp"
#include "soclelab/length.hpp"

namespace soclelab {

/// Finite-dimensional left module over an algebra: one action matrix per
/// algebra basis element. Construction validates the module axioms
/// (structure constants respected, unit acts as identity).
///
/// Right modules are carried as left modules over the opposite algebra, so
/// every operation below applies to both sides.
class FDModule {
 public:
  static FDModule build(AlgebraSC::Ptr alg, std::size_t dim, std::vector<Mat> action);

  /// The algebra acting on itself from the left: action(b_i) = left_regular.
  static FDModule regular(const AlgebraSC::Ptr& alg);
  /// An ideal with the induced action; right ideals become modules over the
  /// opposite algebra.
  static FDModule ideal_as_module(const OneSidedIdeal& l);

  const AlgebraSC::Ptr& algebra() const { return alg_; }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }
  const Mat& action(std::size_t i) const { return action_[i]; }

  /// Action of a general element: sum of a_i * action(b_i).
  Mat action_of(const Vec& a) const;
  Vec act(const Vec& a, const Vec& m) const { return action_of(a).apply(m); }

  /// Is the subspace closed under every action generator?
  bool is_submodule(const Subspace& s) const;
  /// The module structure on an invariant subspace, in its basis coordinates.
  FDModule restricted(const Subspace& submodule) const;
  /// The quotient by an invariant subspace, on the non-pivot coordinate
  /// section of its RREF basis.
  FDModule quotient(const Subspace& submodule) const;

  friend bool operator==(const FDModule& a, const FDModule& b);

 private:
  FDModule() = default;
  AlgebraSC::Ptr alg_;
  std::size_t dim_ = 0;
  std::vector<Mat> action_;
};

/// A/L together with the coordinate maps between the algebra and the
/// quotient (projection: algebra coords -> quotient coords; section: the
/// representative lift onto non-pivot coordinates).
struct LeftQuotient {
  FDModule module;
  Subspace ideal_space;
  Mat projection;
  Mat section;
};
LeftQuotient left_quotient_context(const OneSidedIdeal& l);

/// A/L as a module; mirrored through the opposite algebra for right ideals.
FDModule quotient_by_ideal(const OneSidedIdeal& l);

/// Least action-invariant subspace containing the generators.
Subspace spin(const FDModule& m, const std::vector<Vec>& generators);

/// rad(A) . M as a subspace of M (a submodule, since the radical is
/// two-sided).
Subspace radical_submodule(const FDModule& m);

bool is_semisimple_module(const FDModule& m);

/// A certified simple submodule of a nonzero module, as a subspace of m.
/// Deterministic for fixed seed: basis-vector spins first, then seeded
/// kernel-vector spins, then the certification protocol (kernel candidates
/// of 10 seeded elements must regenerate, exhaustive spin scan at small
/// dimension). Raises ChopInconclusive if no certificate is reachable.
Subspace simple_submodule(const FDModule& m, std::uint64_t seed = 0x73696d70ull);

/// Composition length by radical filtration plus chop of each semisimple
/// layer. Requires a prime field with p > dim(algebra).
LengthValue composition_length(const FDModule& m, std::uint64_t seed = 0x73696d70ull);

/// An action-invariant complement of a submodule inside a semisimple
/// module, computed from an equivariant projection onto u.
Subspace module_complement(const FDModule& m, const Subspace& u);

/// For L with semisimple quotient: maximal left ideals m_1..m_n with
/// intersection exactly L and n <= len(A/L); nullopt when A/L is not
/// semisimple. n = 0 (empty list) iff L = A.
std::optional<std::vector<OneSidedIdeal>> semi_maximal_witness(const OneSidedIdeal& l);

/// For proper L with semisimple quotient: an element q with q not in L,
/// Lq inside L, and L + A(1-q) a maximal left ideal. All three properties
/// re-verified before returning.
Element min_complement_q(const OneSidedIdeal& l);

/// Equivariant map between modules over one algebra; equivariance is
/// validated on every algebra basis element.
class ModuleMap {
 public:
  ModuleMap(FDModule source, FDModule target, Mat matrix);

  const FDModule& source() const { return src_; }
  const FDModule& target() const { return tgt_; }
  const Mat& matrix() const { return mat_; }

  Subspace kernel() const;
  Subspace image() const;
  ModuleMap compose(const ModuleMap& inner) const;  // this after inner

 private:
  FDModule src_, tgt_;
  Mat mat_;
};

/// Basis of Hom(m, n) from the linear equivariance system, in canonical
/// (RREF) order.
std::vector<ModuleMap> hom_space(const FDModule& m, const FDModule& n);

/// len(ker) - len(coker); present whenever both lengths are finite, which
/// is always the case here.
std::optional<long long> module_map_index(const ModuleMap& f);

}  // namespace soclelab

#endif
