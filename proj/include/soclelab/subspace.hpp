#ifndef SOCLELAB_SUBSPACE_HPP
#define SOCLELAB_SUBSPACE_HPP

#include <optional>
#include <vector>

#include "soclelab/matrix.hpp"

namespace soclelab {

/// Subspace of a coordinate space, stored as a canonical RREF basis with no
/// zero rows. Two equal subspaces have identical basis matrices, so equality
/// and containment are pure data comparisons. This is the universal carrier
/// for ideals, kernels and images.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(FieldCtx f, std::size_t ambient);
  static Subspace full(FieldCtx f, std::size_t ambient);
  static Subspace row_space(const Mat& m);
  static Subspace span(FieldCtx f, std::size_t ambient, const std::vector<Vec>& vectors);

  FieldCtx field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t codim() const { return ambient_ - dim(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> nonpivots() const;

  /// Remainder of x after eliminating against the basis. Zero iff contained.
  Vec reduce(const Vec& x) const;
  bool contains(const Vec& x) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of x in terms of the basis rows; nullopt if not contained.
  std::optional<Vec> coords_of(const Vec& x) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  Mat basis_;  // RREF, rows = dim
  std::vector<std::size_t> pivots_;
};

}  // namespace soclelab

#endif
