#ifndef SOCLELAB_MATRIX_HPP
#define SOCLELAB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "soclelab/field.hpp"

namespace soclelab {

using Vec = std::vector<Scalar>;

Vec zero_vec(FieldCtx f, std::size_t n);
Vec unit_vec(FieldCtx f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
std::string vec_to_string(const Vec& v);

/// Dense matrix of exact scalars, row-major. Row/column counts may be zero;
/// a 0xN or Nx0 matrix is a legal value.
class Mat {
 public:
  Mat() = default;
  Mat(FieldCtx f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar(f)) {}

  static Mat identity(FieldCtx f, std::size_t n);
  static Mat from_rows(FieldCtx f, std::size_t cols, const std::vector<Vec>& rows);

  FieldCtx field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);

  Mat transpose() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;  // kernels::mul with automatic policy
  Mat scaled(const Scalar& c) const;
  Vec apply(const Vec& x) const;  // matrix * column vector

  bool is_zero() const;
  Scalar trace() const;
  std::string to_string() const;

  friend bool operator==(const Mat& a, const Mat& b);

 private:
  FieldCtx field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Mat mat;                         // RREF with zero rows removed
  std::vector<std::size_t> pivots; // strictly increasing pivot columns
};

/// Reduced row echelon form. Over GF(p) plain Gauss-Jordan; over the
/// rationals a fraction-free Bareiss forward pass keeps intermediate
/// entries small before the normalization to leading-one form.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// One solution of m*x = b (free coordinates set to zero), or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Rows span the null space {x : m*x = 0}; result is in canonical RREF.
Mat null_space(const Mat& m);

namespace kernels {

enum class Exec { Serial, Parallel, Auto };

/// Matrix product. The parallel variant splits output rows across OpenMP
/// threads; results are identical to the serial reference because every
/// entry is computed by the same exact-arithmetic expression.
Mat mul(const Mat& a, const Mat& b, Exec how = Exec::Auto);
Mat mul_serial(const Mat& a, const Mat& b);

RrefResult rref(const Mat& m, Exec how);
RrefResult rref_serial(const Mat& m);

}  // namespace kernels

}  // namespace soclelab

#endif
