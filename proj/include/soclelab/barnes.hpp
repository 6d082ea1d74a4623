#ifndef SOCLELAB_BARNES_HPP
#define SOCLELAB_BARNES_HPP

#include <cstddef>
#include <string>

#include "soclelab/fredholm.hpp"
#include "soclelab/length.hpp"
#include "soclelab/matrix.hpp"

namespace soclelab {

/// Element lambda*1 + F of the infinite-dimensional algebra F*1 + M_fin(F)
/// (scalars plus finite-support matrices). The finite part is stored as a
/// square block that is always trimmed: no trailing index whose row and
/// column are both zero. Equality is (lambda, trimmed block) equality.
///
/// The socle is exactly {lambda = 0}, it is essential, and the quotient by
/// it is the ground field — the smallest setting where Fredholm theory
/// does not collapse to invertibility.
class BarnesElement {
 public:
  /// Trims the block; it must be square over the same field as lambda.
  BarnesElement(Scalar lambda, Mat block);

  static BarnesElement zero(FieldCtx f);
  static BarnesElement one(FieldCtx f);
  static BarnesElement scalar(FieldCtx f, const Scalar& l);
  /// 0 + E_ij (zero-based indices).
  static BarnesElement matrix_unit(FieldCtx f, std::size_t i, std::size_t j);

  FieldCtx field() const { return lambda_.field(); }
  const Scalar& lambda() const { return lambda_; }
  const Mat& block() const { return block_; }
  std::size_t block_size() const { return block_.rows(); }
  bool is_zero() const { return lambda_.is_zero() && block_.rows() == 0; }

  std::string to_string() const;

  friend bool operator==(const BarnesElement& a, const BarnesElement& b);
  friend bool operator!=(const BarnesElement& a, const BarnesElement& b) { return !(a == b); }

 private:
  Scalar lambda_;
  Mat block_;
};

/// Drops trailing all-zero row/column pairs; the canonical block form.
Mat b_trim(const Mat& block);

/// Arithmetic: blocks are zero-padded to a common size, combined by
/// (lambda+F)(mu+G) = lambda*mu + (lambda G + mu F + FG), and re-trimmed.
BarnesElement b_add(const BarnesElement& a, const BarnesElement& b);
BarnesElement b_sub(const BarnesElement& a, const BarnesElement& b);
BarnesElement b_mul(const BarnesElement& a, const BarnesElement& b);
BarnesElement b_scale(const BarnesElement& a, const Scalar& c);
/// Transpose on the block, lambda unchanged.
BarnesElement b_star(const BarnesElement& a);

/// soc = {lambda = 0}; [a] in the quotient field is just lambda, so a is
/// Fredholm (= semi-plus = semi-minus) exactly when lambda != 0.
bool b_is_socle(const BarnesElement& a);
bool b_is_fredholm(const BarnesElement& a);

/// All four length quantities coincide here: nullity(lambda I + block)
/// when lambda != 0, Infinite when lambda = 0 (principal ideals inside the
/// socle head infinite chains). Each is exposed under its own name.
LengthValue b_xi_l(const BarnesElement& a);
LengthValue b_xi_r(const BarnesElement& a);
LengthValue b_rho_l(const BarnesElement& a);
LengthValue b_rho_r(const BarnesElement& a);
std::optional<long long> b_zeta_l(const BarnesElement& a);
std::optional<long long> b_zeta_r(const BarnesElement& a);

FredholmReport b_report(const BarnesElement& a);

/// For Fredholm a: the idempotent p = 0 + P with P projecting onto
/// ker(lambda I + block), so that Aa = A(1-p) = lan(p). Certified before
/// returning: p^2 = p, ap = 0, 1-p in Aa, and membership probes
/// x in Aa <=> xp = 0 across a spanning set plus seeded random elements.
/// Throws NotFredholm when lambda = 0.
BarnesElement b_fredholm_witness(const BarnesElement& a);

/// Is x in the principal left ideal Aa? Decided exactly: the scalar part
/// forces the coefficient mu = nu/lambda when lambda != 0; the block part
/// is a row-space test against lambda I + block at the common size.
/// For lambda = 0 membership reduces to solving G F = H - mu F with free
/// scalar mu only when nu = 0.
bool b_in_principal_left(const BarnesElement& x, const BarnesElement& a);

/// For a != 0: a matrix unit E_jj with a*E_jj != 0 — the constructive form
/// of "the socle is essential". Throws ZeroElement on a = 0.
BarnesElement b_essential_socle_witness(const BarnesElement& a);

}  // namespace soclelab

#endif
