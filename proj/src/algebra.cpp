#include "soclelab/algebra.hpp"

#include <algorithm>
#include <tuple>

#include "soclelab/error.hpp"

namespace soclelab {

AlgebraSC::Ptr AlgebraSC::build(FieldCtx f, std::size_t dim, std::vector<ScEntry> mult,
                                Vec unit, std::optional<Mat> involution, std::string name) {
  if (dim == 0) fail(Errc::InvalidSpec, "dim 0 requires the distinguished zero algebra");
  if (unit.size() != dim) fail(Errc::DimensionMismatch, "unit vector length != dim");
  for (const ScEntry& e : mult) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) {
      fail(Errc::InvalidSpec, "structure constant index out of range",
           {static_cast<long>(e.i), static_cast<long>(e.j), static_cast<long>(e.k)});
    }
    if (e.c.field() != f) fail(Errc::FieldMismatch, "structure constant field mismatch");
  }
  for (const Scalar& s : unit) {
    if (s.field() != f) fail(Errc::FieldMismatch, "unit coordinate field mismatch");
  }
  if (involution) {
    if (involution->rows() != dim || involution->cols() != dim) {
      fail(Errc::DimensionMismatch, "involution matrix must be dim x dim");
    }
    if (involution->field() != f) fail(Errc::FieldMismatch, "involution field mismatch");
  }

  auto a = Ptr(new AlgebraSC());
  auto* m = const_cast<AlgebraSC*>(a.get());
  m->field_ = f;
  m->dim_ = dim;
  m->mult_ = std::move(mult);
  m->unit_ = std::move(unit);
  m->involution_ = std::move(involution);
  m->name_ = std::move(name);
  a->validate();
  return a;
}

AlgebraSC::Ptr AlgebraSC::zero_algebra(FieldCtx f) {
  auto a = Ptr(new AlgebraSC());
  auto* m = const_cast<AlgebraSC*>(a.get());
  m->field_ = f;
  m->dim_ = 0;
  m->name_ = "0";
  return a;
}

const Mat& AlgebraSC::involution() const {
  if (!involution_) fail(Errc::MissingInvolution, "algebra " + name_ + " has no involution");
  return *involution_;
}

const Vec& AlgebraSC::basis_product(std::size_t i, std::size_t j) const {
  std::call_once(products_once_, [this] {
    products_.assign(dim_ * dim_, zero_vec(field_, dim_));
    for (const ScEntry& e : mult_) products_[e.i * dim_ + e.j][e.k] += e.c;
  });
  return products_[i * dim_ + j];
}

Vec AlgebraSC::mul_coords(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) {
    fail(Errc::DimensionMismatch, "element coordinate length != dim");
  }
  Vec out = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar cij = a[i] * b[j];
      const Vec& prod = basis_product(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!prod[k].is_zero()) out[k] += cij * prod[k];
      }
    }
  }
  return out;
}

Mat AlgebraSC::left_regular(const Vec& a) const {
  if (a.size() != dim_) fail(Errc::DimensionMismatch, "element coordinate length != dim");
  Mat m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vec& prod = basis_product(i, j);  // b_i * b_j
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!prod[k].is_zero()) m.at(k, j) += a[i] * prod[k];
      }
    }
  }
  return m;
}

Mat AlgebraSC::right_regular(const Vec& a) const {
  if (a.size() != dim_) fail(Errc::DimensionMismatch, "element coordinate length != dim");
  Mat m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      const Vec& prod = basis_product(j, i);  // b_j * b_i
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!prod[k].is_zero()) m.at(k, j) += a[i] * prod[k];
      }
    }
  }
  return m;
}

Vec AlgebraSC::star_coords(const Vec& a) const {
  return involution().apply(a);
}

void AlgebraSC::validate() const {
  // unit laws on every basis vector
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec ei = unit_vec(field_, dim_, i);
    if (mul_coords(unit_, ei) != ei || mul_coords(ei, unit_) != ei) {
      fail(Errc::UnitViolation, "unit law fails on basis vector " + std::to_string(i) +
                                    " of " + name_,
           {static_cast<long>(i), -1, -1});
    }
  }

  // associativity on all basis triples: (b_i b_j) b_k == b_i (b_j b_k).
  // Independent triples — split across threads; first recorded witness wins
  // deterministically by smallest (i,j,k).
  long bad_i = -1, bad_j = -1, bad_k = -1;
  const long n = static_cast<long>(dim_);
#pragma omp parallel for collapse(2) schedule(static) if (n >= 8)
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      const Vec& ij = basis_product(i, j);
      for (long k = 0; k < n; ++k) {
        Vec lhs = zero_vec(field_, dim_);
        for (std::size_t l = 0; l < dim_; ++l) {
          if (ij[l].is_zero()) continue;
          const Vec& lk = basis_product(l, k);
          for (std::size_t t = 0; t < dim_; ++t) {
            if (!lk[t].is_zero()) lhs[t] += ij[l] * lk[t];
          }
        }
        const Vec& jk = basis_product(j, k);
        Vec rhs = zero_vec(field_, dim_);
        for (std::size_t l = 0; l < dim_; ++l) {
          if (jk[l].is_zero()) continue;
          const Vec& il = basis_product(i, l);
          for (std::size_t t = 0; t < dim_; ++t) {
            if (!il[t].is_zero()) rhs[t] += jk[l] * il[t];
          }
        }
        if (lhs != rhs) {
#pragma omp critical
          {
            if (bad_i < 0 || std::tie(i, j, k) < std::tie(bad_i, bad_j, bad_k)) {
              bad_i = i;
              bad_j = j;
              bad_k = k;
            }
          }
        }
      }
    }
  }
  if (bad_i >= 0) {
    fail(Errc::AssociativityViolation,
         "basis triple (" + std::to_string(bad_i) + "," + std::to_string(bad_j) + "," +
             std::to_string(bad_k) + ") of " + name_,
         {bad_i, bad_j, bad_k});
  }

  if (involution_) {
    const Mat& s = *involution_;
    // (a*)* = a  <=>  s*s = identity
    if (!(kernels::mul(s, s) == Mat::identity(field_, dim_))) {
      fail(Errc::InvolutionViolation, "involution is not self-inverse on " + name_);
    }
    // 1* = 1
    if (s.apply(unit_) != unit_) {
      fail(Errc::InvolutionViolation, "involution does not fix the unit of " + name_);
    }
    // (b_i b_j)* = b_j* b_i*
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        Vec lhs = s.apply(basis_product(i, j));
        Vec rhs = mul_coords(s.col(j), s.col(i));
        if (lhs != rhs) {
          fail(Errc::InvolutionViolation,
               "anti-multiplicativity fails on basis pair (" + std::to_string(i) + "," +
                   std::to_string(j) + ") of " + name_,
               {static_cast<long>(i), static_cast<long>(j), -1});
        }
      }
    }
  }
}

const Subspace& AlgebraSC::memo_radical(const std::function<Subspace()>& compute) const {
  std::call_once(radical_once_, [&] { radical_ = compute(); });
  return *radical_;
}

AlgebraSC::Ptr AlgebraSC::memo_opposite(const std::function<Ptr()>& compute) const {
  std::call_once(opposite_once_, [&] { opposite_ = compute(); });
  return opposite_;
}

AlgebraSC::Ptr opposite(const AlgebraSC::Ptr& a) {
  return a->memo_opposite([&]() -> AlgebraSC::Ptr {
    if (a->is_zero_algebra()) return AlgebraSC::zero_algebra(a->field());
    std::vector<ScEntry> rev;
    rev.reserve(a->entries().size());
    for (const ScEntry& e : a->entries()) rev.push_back({e.j, e.i, e.k, e.c});
    // the same star matrix is an involution for the reversed product
    std::optional<Mat> inv;
    if (a->has_involution()) inv = a->involution();
    return AlgebraSC::build(a->field(), a->dim(), std::move(rev), a->unit(), std::move(inv),
                            a->name() + "^op");
  });
}

// ---- Element ------------------------------------------------------------

Element::Element(AlgebraSC::Ptr alg, Vec coords) : alg_(std::move(alg)), coords_(std::move(coords)) {
  if (coords_.size() != alg_->dim()) {
    fail(Errc::DimensionMismatch, "element coordinate length != dim");
  }
  for (const Scalar& s : coords_) {
    if (s.field() != alg_->field()) fail(Errc::FieldMismatch, "element coordinate field mismatch");
  }
}

Element Element::zero(AlgebraSC::Ptr alg) {
  Vec v = zero_vec(alg->field(), alg->dim());
  return Element(std::move(alg), std::move(v));
}

Element Element::unit(AlgebraSC::Ptr alg) {
  Vec v = alg->unit();
  return Element(std::move(alg), std::move(v));
}

Element Element::basis(AlgebraSC::Ptr alg, std::size_t i) {
  Vec v = unit_vec(alg->field(), alg->dim(), i);
  return Element(std::move(alg), std::move(v));
}

void Element::check_same(const Element& o) const {
  if (alg_ != o.alg_) fail(Errc::AlgebraMismatch, "elements of different algebras");
}

Element Element::operator+(const Element& o) const {
  check_same(o);
  return Element(alg_, add(coords_, o.coords_));
}

Element Element::operator-(const Element& o) const {
  check_same(o);
  return Element(alg_, sub(coords_, o.coords_));
}

Element Element::operator*(const Element& o) const {
  check_same(o);
  return Element(alg_, alg_->mul_coords(coords_, o.coords_));
}

Element Element::operator-() const {
  return Element(alg_, scale(-Scalar::one(alg_->field()), coords_));
}

Element Element::scaled(const Scalar& c) const { return Element(alg_, scale(c, coords_)); }

Element Element::star() const { return Element(alg_, alg_->star_coords(coords_)); }

bool operator==(const Element& a, const Element& b) {
  return a.alg_ == b.alg_ && a.coords_ == b.coords_;
}

}  // namespace soclelab
