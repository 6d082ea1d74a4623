#include "soclelab/subspace.hpp"

namespace soclelab {

Subspace Subspace::zero(FieldCtx f, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(f, 0, ambient);
  return s;
}

Subspace Subspace::full(FieldCtx f, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat::identity(f, ambient);
  s.pivots_.resize(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

Subspace Subspace::row_space(const Mat& m) {
  Subspace s;
  s.ambient_ = m.cols();
  RrefResult rr = rref(m);
  s.basis_ = std::move(rr.mat);
  s.pivots_ = std::move(rr.pivots);
  return s;
}

Subspace Subspace::span(FieldCtx f, std::size_t ambient, const std::vector<Vec>& vectors) {
  return row_space(Mat::from_rows(f, ambient, vectors));
}

std::vector<std::size_t> Subspace::nonpivots() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

Vec Subspace::reduce(const Vec& x) const {
  if (x.size() != ambient_) fail(Errc::AmbientMismatch, "reduce: vector length");
  Vec r = x;
  for (std::size_t t = 0; t < pivots_.size(); ++t) {
    const Scalar c = r[pivots_[t]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[t]; j < ambient_; ++j) r[j] -= c * basis_.at(t, j);
  }
  return r;
}

bool Subspace::contains(const Vec& x) const { return is_zero_vec(reduce(x)); }

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(Errc::AmbientMismatch, "contains");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::optional<Vec> Subspace::coords_of(const Vec& x) const {
  if (x.size() != ambient_) fail(Errc::AmbientMismatch, "coords_of");
  Vec r = x;
  Vec coeff(dim(), Scalar(field()));
  for (std::size_t t = 0; t < pivots_.size(); ++t) {
    const Scalar c = r[pivots_[t]];
    if (c.is_zero()) continue;
    coeff[t] = c;
    for (std::size_t j = pivots_[t]; j < ambient_; ++j) r[j] -= c * basis_.at(t, j);
  }
  if (!is_zero_vec(r)) return std::nullopt;
  return coeff;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) fail(Errc::AmbientMismatch, "subspace sum");
  std::vector<Vec> rows;
  rows.reserve(a.dim() + b.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) rows.push_back(a.basis_.row(r));
  for (std::size_t r = 0; r < b.dim(); ++r) rows.push_back(b.basis_.row(r));
  return Subspace::span(a.field(), a.ambient_, rows);
}

// Zassenhaus: reduce [A|A ; B|0]; rows with zero left block carry the
// intersection in the right block.
Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) fail(Errc::AmbientMismatch, "subspace intersect");
  const FieldCtx f = a.field();
  const std::size_t n = a.ambient_;
  Mat block(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      block.at(r, c) = a.basis_.at(r, c);
      block.at(r, n + c) = a.basis_.at(r, c);
    }
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) block.at(a.dim() + r, c) = b.basis_.at(r, c);
  RrefResult rr = rref(block);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rr.mat.rows(); ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = rr.mat.at(r, c).is_zero();
    if (!left_zero) continue;
    Vec v(n, Scalar(f));
    for (std::size_t c = 0; c < n; ++c) v[c] = rr.mat.at(r, n + c);
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, n, rows);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

}  // namespace soclelab
