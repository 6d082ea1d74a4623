#include "soclelab/matrix.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace soclelab {

Vec zero_vec(FieldCtx f, std::size_t n) { return Vec(n, Scalar(f)); }

Vec unit_vec(FieldCtx f, std::size_t n, std::size_t i) {
  if (i >= n) fail(Errc::DimensionMismatch, "unit vector index out of range");
  Vec v(n, Scalar(f));
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "dot: length mismatch");
  if (a.empty()) return Scalar();
  Scalar acc = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vec add: length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vec sub: length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].to_string();
  }
  os << "]";
  return os.str();
}

Mat Mat::identity(FieldCtx f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_rows(FieldCtx f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(Errc::DimensionMismatch, "from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  Vec v(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
  return v;
}

Vec Mat::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Mat::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) fail(Errc::DimensionMismatch, "set_row: length mismatch");
  std::copy(v.begin(), v.end(), e_.begin() + r * cols_);
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::DimensionMismatch, "mat add");
  Mat r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::DimensionMismatch, "mat sub");
  Mat r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const { return kernels::mul(*this, o, kernels::Exec::Auto); }

Mat Mat::scaled(const Scalar& c) const {
  Mat r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_) fail(Errc::DimensionMismatch, "mat apply");
  Vec y(rows_, Scalar(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !x[c].is_zero()) acc += at(r, c) * x[c];
    }
    y[r] = acc;
  }
  return y;
}

bool Mat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar Mat::trace() const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += at(i, i);
  return acc;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << " ";
      os << at(r, c).to_string();
    }
  }
  os << "]";
  return os.str();
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

namespace kernels {

namespace {

constexpr std::size_t kParallelWork = 1 << 14;

bool want_parallel(Exec how, std::size_t work) {
  switch (how) {
    case Exec::Serial: return false;
    case Exec::Parallel: return true;
    case Exec::Auto: return work >= kParallelWork && omp_get_max_threads() > 1;
  }
  return false;
}

void mul_row_range(const Mat& a, const Mat& b, Mat& c, std::size_t r0, std::size_t r1) {
  const std::size_t n = a.cols(), m = b.cols();
  for (std::size_t i = r0; i < r1; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  }
}

}  // namespace

Mat mul_serial(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) fail(Errc::DimensionMismatch, "mat mul");
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "mat mul");
  Mat c(a.field(), a.rows(), b.cols());
  mul_row_range(a, b, c, 0, a.rows());
  return c;
}

Mat mul(const Mat& a, const Mat& b, Exec how) {
  if (a.cols() != b.rows()) fail(Errc::DimensionMismatch, "mat mul");
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "mat mul");
  const std::size_t work = a.rows() * a.cols() * b.cols();
  if (!want_parallel(how, work)) return mul_serial(a, b);
  Mat c(a.field(), a.rows(), b.cols());
  const long rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < rows; ++i) {
    mul_row_range(a, b, c, static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1);
  }
  return c;
}

namespace {

// Gauss-Jordan over GF(p). Row updates are independent once the pivot row is
// normalized, which is what the parallel loop exploits.
RrefResult rref_gf(const Mat& m, Exec how) {
  const FieldCtx f = m.field();
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<Vec> rows;
  rows.reserve(nr);
  for (std::size_t r = 0; r < nr; ++r) rows.push_back(m.row(r));

  std::vector<std::size_t> pivots;
  std::size_t front = 0;
  for (std::size_t c = 0; c < nc && front < nr; ++c) {
    std::size_t piv = front;
    while (piv < nr && rows[piv][c].is_zero()) ++piv;
    if (piv == nr) continue;
    std::swap(rows[front], rows[piv]);
    const Scalar inv = rows[front][c].inverse();
    for (std::size_t j = c; j < nc; ++j) rows[front][j] *= inv;

    const bool par = want_parallel(how, nr * (nc - c));
    const long total = static_cast<long>(nr);
#pragma omp parallel for schedule(static) if (par)
    for (long k = 0; k < total; ++k) {
      auto uk = static_cast<std::size_t>(k);
      if (uk == front) continue;
      const Scalar factor = rows[uk][c];
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < nc; ++j) rows[uk][j] -= factor * rows[front][j];
    }
    pivots.push_back(c);
    ++front;
  }

  RrefResult res;
  res.pivots = std::move(pivots);
  res.mat = Mat::from_rows(f, nc, std::vector<Vec>(rows.begin(), rows.begin() + front));
  return res;
}

// Fraction-free (Bareiss) forward elimination on a denominator-cleared copy,
// then exact normalization to leading-one reduced form.
RrefResult rref_qq(const Mat& m, Exec how) {
  const FieldCtx f = m.field();
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<mpz_class>> g(nr, std::vector<mpz_class>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < nc; ++c) l = lcm(l, m.at(r, c).rational().get_den());
    for (std::size_t c = 0; c < nc; ++c) {
      mpq_class q = m.at(r, c).rational() * mpq_class(l);
      q.canonicalize();
      g[r][c] = q.get_num();
    }
  }

  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t front = 0;
  for (std::size_t c = 0; c < nc && front < nr; ++c) {
    std::size_t piv = front;
    while (piv < nr && g[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(g[front], g[piv]);

    const bool par = want_parallel(how, (nr - front) * (nc - c));
    const long lo = static_cast<long>(front) + 1, hi = static_cast<long>(nr);
#pragma omp parallel for schedule(static) if (par)
    for (long k = lo; k < hi; ++k) {
      auto uk = static_cast<std::size_t>(k);
      for (std::size_t j = c + 1; j < nc; ++j) {
        mpz_class t = g[front][c] * g[uk][j] - g[uk][c] * g[front][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        g[uk][j] = std::move(t);
      }
      g[uk][c] = 0;
    }
    prev = g[front][c];
    pivots.push_back(c);
    ++front;
  }

  // Normalize the echelon rows to leading ones and reduce upward.
  const std::size_t rk = front;
  std::vector<std::vector<mpq_class>> q(rk, std::vector<mpq_class>(nc));
  for (std::size_t r = 0; r < rk; ++r) {
    mpq_class inv(1);
    inv /= mpq_class(g[r][pivots[r]]);
    for (std::size_t c = pivots[r]; c < nc; ++c) {
      q[r][c] = mpq_class(g[r][c]) * inv;
      q[r][c].canonicalize();
    }
  }
  for (std::size_t s = rk; s-- > 0;) {
    const std::size_t pc = pivots[s];
    const bool par = want_parallel(how, s * (nc - pc));
    const long hi = static_cast<long>(s);
#pragma omp parallel for schedule(static) if (par)
    for (long t = 0; t < hi; ++t) {
      auto ut = static_cast<std::size_t>(t);
      mpq_class factor = q[ut][pc];
      if (factor == 0) continue;
      for (std::size_t j = pc; j < nc; ++j) {
        q[ut][j] -= factor * q[s][j];
        q[ut][j].canonicalize();
      }
    }
  }

  Mat out(f, rk, nc);
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.at(r, c) = Scalar::of_rational(q[r][c]);
  RrefResult res;
  res.mat = std::move(out);
  res.pivots = std::move(pivots);
  return res;
}

}  // namespace

RrefResult rref(const Mat& m, Exec how) {
  return m.field().is_rationals() ? rref_qq(m, how) : rref_gf(m, how);
}

RrefResult rref_serial(const Mat& m) { return rref(m, Exec::Serial); }

}  // namespace kernels

RrefResult rref(const Mat& m) { return kernels::rref(m, kernels::Exec::Auto); }

std::size_t rank(const Mat& m) { return rref(m).mat.rows(); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) fail(Errc::DimensionMismatch, "solve: rhs length");
  const FieldCtx f = m.field();
  Mat aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  RrefResult rr = rref(aug);
  for (std::size_t t = 0; t < rr.pivots.size(); ++t) {
    if (rr.pivots[t] == m.cols()) return std::nullopt;  // pivot in rhs column
  }
  Vec x(m.cols(), Scalar(f));
  for (std::size_t t = 0; t < rr.pivots.size(); ++t) x[rr.pivots[t]] = rr.mat.at(t, m.cols());
  return x;
}

Mat null_space(const Mat& m) {
  const FieldCtx f = m.field();
  RrefResult rr = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < nc; ++j) {
    if (is_pivot[j]) continue;
    Vec v(nc, Scalar(f));
    v[j] = Scalar::one(f);
    for (std::size_t t = 0; t < rr.pivots.size(); ++t) v[rr.pivots[t]] = -rr.mat.at(t, j);
    basis.push_back(std::move(v));
  }
  return rref(Mat::from_rows(f, nc, basis)).mat;
}

}  // namespace soclelab
