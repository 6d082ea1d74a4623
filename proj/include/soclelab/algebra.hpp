#ifndef SOCLELAB_ALGEBRA_HPP
#define SOCLELAB_ALGEBRA_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "soclelab/matrix.hpp"
#include "soclelab/subspace.hpp"

namespace soclelab {

/// One nonzero structure constant: b_i * b_j contains c * b_k.
struct ScEntry {
  std::size_t i, j, k;
  Scalar c;
};

/// Finite-dimensional unital associative algebra given by structure
/// constants over a fixed basis. Validated eagerly on construction
/// (associativity, unit laws, involution laws — each violation reports the
/// witness basis indices). Immutable afterwards; shared by handle.
///
/// The dim-0 algebra is a legal distinguished value (quotient by the full
/// space); its unique element 0 = 1 counts as invertible.
class AlgebraSC {
 public:
  using Ptr = std::shared_ptr<const AlgebraSC>;

  static Ptr build(FieldCtx f, std::size_t dim, std::vector<ScEntry> mult, Vec unit,
                   std::optional<Mat> involution = std::nullopt, std::string name = "A");
  static Ptr zero_algebra(FieldCtx f);

  FieldCtx field() const { return field_; }
  std::size_t dim() const { return dim_; }
  bool is_zero_algebra() const { return dim_ == 0; }
  const Vec& unit() const { return unit_; }
  bool has_involution() const { return involution_.has_value(); }
  const Mat& involution() const;
  const std::string& name() const { return name_; }
  const std::vector<ScEntry>& entries() const { return mult_; }

  /// Dense coordinates of b_i * b_j (cached table, built on first use).
  const Vec& basis_product(std::size_t i, std::size_t j) const;

  Vec mul_coords(const Vec& a, const Vec& b) const;
  /// L_a as a matrix: column j holds coords(a * b_j).
  Mat left_regular(const Vec& a) const;
  /// R_a as a matrix: column j holds coords(b_j * a).
  Mat right_regular(const Vec& a) const;
  Vec star_coords(const Vec& a) const;

  /// Memoized slots computed by higher layers (radical, opposite algebra).
  /// call_once keeps concurrent readers deterministic.
  const Subspace& memo_radical(const std::function<Subspace()>& compute) const;
  Ptr memo_opposite(const std::function<Ptr()>& compute) const;

 private:
  AlgebraSC() = default;
  void validate() const;

  FieldCtx field_;
  std::size_t dim_ = 0;
  std::vector<ScEntry> mult_;
  Vec unit_;
  std::optional<Mat> involution_;
  std::string name_;

  mutable std::once_flag products_once_;
  mutable std::vector<Vec> products_;  // dim*dim dense table

  mutable std::once_flag radical_once_;
  mutable std::optional<Subspace> radical_;
  mutable std::once_flag opposite_once_;
  mutable Ptr opposite_;
};

/// Element of a specific algebra: handle plus coordinate vector.
class Element {
 public:
  Element(AlgebraSC::Ptr alg, Vec coords);

  static Element zero(AlgebraSC::Ptr alg);
  static Element unit(AlgebraSC::Ptr alg);
  static Element basis(AlgebraSC::Ptr alg, std::size_t i);

  const AlgebraSC::Ptr& algebra() const { return alg_; }
  const Vec& coords() const { return coords_; }
  bool is_zero() const { return is_zero_vec(coords_); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const;
  Element scaled(const Scalar& c) const;
  Element star() const;

  Mat left_regular() const { return alg_->left_regular(coords_); }
  Mat right_regular() const { return alg_->right_regular(coords_); }

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  void check_same(const Element& o) const;
  AlgebraSC::Ptr alg_;
  Vec coords_;
};

/// Same underlying space with reversed multiplication. Right modules over A
/// are left modules over opposite(A); memoized per algebra.
AlgebraSC::Ptr opposite(const AlgebraSC::Ptr& a);

}  // namespace soclelab

#endif
