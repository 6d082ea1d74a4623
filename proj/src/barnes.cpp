#include "soclelab/barnes.hpp"

#include <random>
#include <sstream>

#include "soclelab/error.hpp"
#include "soclelab/subspace.hpp"

namespace soclelab {

namespace {

Mat padded(const Mat& block, std::size_t m) {
  Mat out(block.field(), m, m);
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) out.at(i, j) = block.at(i, j);
  return out;
}

// lambda I_m + F_m: right multiplication by a, restricted to the block.
Mat shifted_block(const BarnesElement& a, std::size_t m) {
  Mat out = padded(a.block(), m);
  for (std::size_t i = 0; i < m; ++i) out.at(i, i) += a.lambda();
  return out;
}

}  // namespace

Mat b_trim(const Mat& block) {
  std::size_t n = block.rows();
  auto edge_zero = [&](std::size_t k) {
    for (std::size_t t = 0; t < k + 1; ++t) {
      if (!block.at(k, t).is_zero() || !block.at(t, k).is_zero()) return false;
    }
    return true;
  };
  while (n > 0 && edge_zero(n - 1)) --n;
  if (n == block.rows()) return block;
  Mat out(block.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = block.at(i, j);
  return out;
}

namespace {

const Mat& checked_block(const Scalar& lambda, const Mat& block) {
  if (block.rows() != block.cols()) fail(Errc::DimensionMismatch, "block must be square");
  if (block.field() != lambda.field()) fail(Errc::FieldMismatch, "block field != lambda field");
  return block;
}

}  // namespace

BarnesElement::BarnesElement(Scalar lambda, Mat block)
    : lambda_(std::move(lambda)), block_(b_trim(checked_block(lambda_, block))) {}

BarnesElement BarnesElement::zero(FieldCtx f) { return BarnesElement(Scalar::of(f, 0), Mat(f, 0, 0)); }
BarnesElement BarnesElement::one(FieldCtx f) { return BarnesElement(Scalar::of(f, 1), Mat(f, 0, 0)); }

BarnesElement BarnesElement::scalar(FieldCtx f, const Scalar& l) {
  return BarnesElement(l, Mat(f, 0, 0));
}

BarnesElement BarnesElement::matrix_unit(FieldCtx f, std::size_t i, std::size_t j) {
  const std::size_t n = std::max(i, j) + 1;
  Mat block(f, n, n);
  block.at(i, j) = Scalar::of(f, 1);
  return BarnesElement(Scalar::of(f, 0), std::move(block));
}

std::string BarnesElement::to_string() const {
  std::ostringstream os;
  os << lambda_.to_string() << " + block" << block_.rows() << "x" << block_.cols();
  return os.str();
}

bool operator==(const BarnesElement& a, const BarnesElement& b) {
  return a.lambda_ == b.lambda_ && a.block_ == b.block_;
}

BarnesElement b_add(const BarnesElement& a, const BarnesElement& b) {
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "mixed-field addition");
  const std::size_t m = std::max(a.block_size(), b.block_size());
  Mat fa = padded(a.block(), m), fb = padded(b.block(), m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) fa.at(i, j) += fb.at(i, j);
  return BarnesElement(a.lambda() + b.lambda(), std::move(fa));
}

BarnesElement b_scale(const BarnesElement& a, const Scalar& c) {
  Mat f = a.block();
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) f.at(i, j) *= c;
  return BarnesElement(a.lambda() * c, std::move(f));
}

BarnesElement b_sub(const BarnesElement& a, const BarnesElement& b) {
  return b_add(a, b_scale(b, Scalar::of(b.field(), -1)));
}

BarnesElement b_mul(const BarnesElement& a, const BarnesElement& b) {
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "mixed-field product");
  const std::size_t m = std::max(a.block_size(), b.block_size());
  Mat fa = padded(a.block(), m), fb = padded(b.block(), m);
  // (lambda + F)(mu + G) = lambda mu + (lambda G + mu F + F G)
  Mat prod = kernels::mul(fa, fb);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      prod.at(i, j) += a.lambda() * fb.at(i, j) + b.lambda() * fa.at(i, j);
    }
  }
  return BarnesElement(a.lambda() * b.lambda(), std::move(prod));
}

BarnesElement b_star(const BarnesElement& a) {
  return BarnesElement(a.lambda(), a.block().transpose());
}

bool b_is_socle(const BarnesElement& a) { return a.lambda().is_zero(); }
bool b_is_fredholm(const BarnesElement& a) { return !a.lambda().is_zero(); }

namespace {

LengthValue b_length(const BarnesElement& a) {
  if (a.lambda().is_zero()) return LengthValue::infinite();
  const std::size_t n = a.block_size();
  Mat m = shifted_block(a, n);
  return LengthValue::finite(n - rank(m));
}

}  // namespace

LengthValue b_xi_l(const BarnesElement& a) { return b_length(a); }
LengthValue b_xi_r(const BarnesElement& a) { return b_length(a); }
LengthValue b_rho_l(const BarnesElement& a) { return b_length(a); }
LengthValue b_rho_r(const BarnesElement& a) { return b_length(a); }

std::optional<long long> b_zeta_l(const BarnesElement& a) {
  if (a.lambda().is_zero()) return std::nullopt;
  return 0;
}
std::optional<long long> b_zeta_r(const BarnesElement& a) { return b_zeta_l(a); }

FredholmReport b_report(const BarnesElement& a) {
  FredholmReport r;
  r.is_fredholm = r.is_semi_plus = r.is_semi_minus = b_is_fredholm(a);
  r.xi_l = b_xi_l(a);
  r.xi_r = b_xi_r(a);
  r.rho_l = b_rho_l(a);
  r.rho_r = b_rho_r(a);
  r.is_weak_plus = r.xi_l.is_finite();
  r.is_weak_minus = r.xi_r.is_finite();
  r.zeta_l = b_zeta_l(a);
  r.zeta_r = b_zeta_r(a);
  return r;
}

bool b_in_principal_left(const BarnesElement& x, const BarnesElement& a) {
  if (x.field() != a.field()) fail(Errc::FieldMismatch, "membership across fields");
  const FieldCtx f = a.field();
  const std::size_t m = std::max(x.block_size(), a.block_size());

  // x = (mu + G) a solves (nu, H) = (mu lambda, mu F + G M) with
  // M = lambda I + F; unknowns are mu and the m*m entries of G. Padding
  // beyond the common size changes nothing (the new rows of M are scalar
  // rows, the new target entries zero).
  Mat big = shifted_block(a, m);
  Mat fa = padded(a.block(), m);
  Mat h = padded(x.block(), m);

  const std::size_t unknowns = 1 + m * m;
  Mat sys(f, m * m + 1, unknowns);
  Vec rhs;
  rhs.reserve(m * m + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      sys.at(r * m + c, 0) = fa.at(r, c);
      for (std::size_t k = 0; k < m; ++k) sys.at(r * m + c, 1 + r * m + k) = big.at(k, c);
      rhs.push_back(h.at(r, c));
    }
  }
  sys.at(m * m, 0) = a.lambda();
  rhs.push_back(x.lambda());
  return solve(sys, rhs).has_value();
}

BarnesElement b_fredholm_witness(const BarnesElement& a) {
  if (a.lambda().is_zero()) {
    fail(Errc::NotFredholm, "witness undefined off the Fredholm set (lambda = 0)");
  }
  const FieldCtx f = a.field();
  const std::size_t n = a.block_size();

  // P projects onto ker(lambda I + F) along the span of the non-pivot
  // coordinates of its RREF basis: P x = sum_r x[piv_r] * basis_r.
  Subspace ker = Subspace::row_space(null_space(shifted_block(a, n)));
  Mat p_block(f, n, n);
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    for (std::size_t i = 0; i < n; ++i) p_block.at(i, ker.pivots()[r]) = ker.basis().at(r, i);
  }
  BarnesElement p(Scalar::of(f, 0), std::move(p_block));

  // Certify: p idempotent, a p = 0 (so Aa <= lan(p)), and 1 - p in Aa
  // (so lan(p) = A(1-p) <= Aa); together these force Aa = lan(p).
  BarnesElement one = BarnesElement::one(f);
  if (!(b_mul(p, p) == p)) fail(Errc::InternalCheckFailed, "witness is not idempotent");
  if (!b_mul(a, p).is_zero()) fail(Errc::InternalCheckFailed, "a p != 0");
  if (!b_in_principal_left(b_sub(one, p), a)) {
    fail(Errc::InternalCheckFailed, "1 - p escapes the principal ideal");
  }
  if (LengthValue::finite(ker.dim()) != b_xi_l(a)) {
    fail(Errc::InternalCheckFailed, "witness rank disagrees with the length");
  }

  // Spanning probes plus seeded random elements: membership in Aa must
  // coincide with xp = 0 on each.
  std::vector<BarnesElement> probes{one, a, p};
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) probes.push_back(BarnesElement::matrix_unit(f, i, j));
  std::mt19937_64 rng(0x6272776eull);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int t = 0; t < 10; ++t) {
    Mat g(f, n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) g.at(i, j) = Scalar::of(f, d(rng));
    probes.emplace_back(Scalar::of(f, d(rng)), std::move(g));
  }
  for (const BarnesElement& x : probes) {
    if (b_in_principal_left(x, a) != b_mul(x, p).is_zero()) {
      fail(Errc::InternalCheckFailed, "membership probe disagrees with the witness");
    }
  }
  return p;
}

BarnesElement b_essential_socle_witness(const BarnesElement& a) {
  if (a.is_zero()) fail(Errc::ZeroElement, "the zero element kills every socle element");
  const FieldCtx f = a.field();
  std::size_t j = a.block_size();  // one past the block: a E_jj = lambda E_jj
  if (a.lambda().is_zero()) {
    for (j = 0; j < a.block_size(); ++j) {
      bool nonzero = false;
      for (std::size_t i = 0; i < a.block_size(); ++i) nonzero |= !a.block().at(i, j).is_zero();
      if (nonzero) break;
    }
  }
  BarnesElement e = BarnesElement::matrix_unit(f, j, j);
  if (b_mul(a, e).is_zero()) {
    fail(Errc::InternalCheckFailed, "essential-socle witness does not act");
  }
  return e;
}

}  // namespace soclelab
