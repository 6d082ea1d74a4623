#include "soclelab/module.hpp"

#include <algorithm>
#include <random>

#include "soclelab/error.hpp"

namespace soclelab {

namespace {

Vec random_vec(FieldCtx f, std::size_t n, std::mt19937_64& rng) {
  Vec x = zero_vec(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_prime_field()) {
      std::uniform_int_distribution<std::uint64_t> d(0, f.characteristic() - 1);
      x[i] = Scalar::of_residue(f, d(rng));
    } else {
      std::uniform_int_distribution<long long> d(-5, 5);
      x[i] = Scalar::of(f, d(rng));
    }
  }
  return x;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.pivots() != b.pivots()) return a.pivots() < b.pivots();
  const Mat &ma = a.basis(), &mb = b.basis();
  for (std::size_t i = 0; i < ma.rows(); ++i)
    for (std::size_t j = 0; j < ma.cols(); ++j) {
      int c = Scalar::compare(ma.at(i, j), mb.at(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

}  // namespace

FDModule FDModule::build(AlgebraSC::Ptr alg, std::size_t dim, std::vector<Mat> action) {
  const FieldCtx f = alg->field();
  const std::size_t adim = alg->dim();
  if (action.size() != adim) {
    fail(Errc::DimensionMismatch, "need one action matrix per algebra basis element");
  }
  for (const Mat& m : action) {
    if (m.rows() != dim || m.cols() != dim) {
      fail(Errc::DimensionMismatch, "action matrix is not dim x dim");
    }
    if (dim > 0 && m.field() != f) fail(Errc::FieldMismatch, "action field mismatch");
  }

  FDModule mod;
  mod.alg_ = std::move(alg);
  mod.dim_ = dim;
  mod.action_ = std::move(action);

  // unit acts as the identity
  if (!(mod.action_of(mod.alg_->unit()) == Mat::identity(f, dim))) {
    fail(Errc::InvalidSpec, "unit does not act as the identity");
  }
  // structure constants respected: action(b_i) action(b_j) = action(b_i b_j)
  for (std::size_t i = 0; i < adim; ++i) {
    for (std::size_t j = 0; j < adim; ++j) {
      Mat lhs = kernels::mul(mod.action_[i], mod.action_[j]);
      Mat rhs = mod.action_of(mod.alg_->basis_product(i, j));
      if (!(lhs == rhs)) {
        fail(Errc::InvalidSpec,
             "action violates the product of basis elements (" + std::to_string(i) + "," +
                 std::to_string(j) + ")",
             {static_cast<long>(i), static_cast<long>(j), -1});
      }
    }
  }
  return mod;
}

FDModule FDModule::regular(const AlgebraSC::Ptr& alg) {
  std::vector<Mat> action;
  action.reserve(alg->dim());
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    action.push_back(alg->left_regular(unit_vec(alg->field(), alg->dim(), i)));
  }
  return build(alg, alg->dim(), std::move(action));
}

namespace {

/// The algebra acting on itself by right multiplication, as a left module
/// over the opposite algebra (R_a R_b = R_{ba} matches reversed constants).
FDModule right_regular_module(const AlgebraSC::Ptr& alg) {
  std::vector<Mat> action;
  action.reserve(alg->dim());
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    action.push_back(alg->right_regular(unit_vec(alg->field(), alg->dim(), i)));
  }
  return FDModule::build(opposite(alg), alg->dim(), std::move(action));
}

}  // namespace

FDModule FDModule::ideal_as_module(const OneSidedIdeal& l) {
  FDModule whole =
      (l.side() == Side::Left) ? regular(l.algebra()) : right_regular_module(l.algebra());
  return whole.restricted(l.space());
}

Mat FDModule::action_of(const Vec& a) const {
  if (a.size() != alg_->dim()) fail(Errc::DimensionMismatch, "element length != algebra dim");
  Mat out(alg_->field(), dim_, dim_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) {
        const Scalar& v = action_[i].at(r, c);
        if (!v.is_zero()) out.at(r, c) += a[i] * v;
      }
  }
  return out;
}

bool FDModule::is_submodule(const Subspace& s) const {
  if (s.ambient() != dim_) fail(Errc::AmbientMismatch, "subspace ambient != module dim");
  for (std::size_t i = 0; i < alg_->dim(); ++i) {
    for (std::size_t r = 0; r < s.dim(); ++r) {
      if (!s.contains(action_[i].apply(s.basis().row(r)))) return false;
    }
  }
  return true;
}

FDModule FDModule::restricted(const Subspace& sub) const {
  if (!is_submodule(sub)) fail(Errc::InvalidSpec, "subspace is not action-invariant");
  const FieldCtx f = alg_->field();
  const std::size_t k = sub.dim();
  std::vector<Mat> action;
  action.reserve(alg_->dim());
  for (std::size_t i = 0; i < alg_->dim(); ++i) {
    Mat m(f, k, k);
    for (std::size_t c = 0; c < k; ++c) {
      auto coords = sub.coords_of(action_[i].apply(sub.basis().row(c)));
      if (!coords) fail(Errc::InternalCheckFailed, "restricted image left the subspace");
      for (std::size_t r = 0; r < k; ++r) m.at(r, c) = (*coords)[r];
    }
    action.push_back(std::move(m));
  }
  FDModule mod;
  mod.alg_ = alg_;
  mod.dim_ = k;
  mod.action_ = std::move(action);
  return mod;
}

FDModule FDModule::quotient(const Subspace& sub) const {
  if (!is_submodule(sub)) fail(Errc::InvalidSpec, "subspace is not action-invariant");
  const FieldCtx f = alg_->field();
  const std::vector<std::size_t> t = sub.nonpivots();
  const std::size_t q = t.size();

  auto project = [&](const Vec& x) {
    Vec r = sub.reduce(x);
    Vec out;
    out.reserve(q);
    for (std::size_t s : t) out.push_back(r[s]);
    return out;
  };

  std::vector<Mat> action;
  action.reserve(alg_->dim());
  for (std::size_t i = 0; i < alg_->dim(); ++i) {
    Mat m(f, q, q);
    for (std::size_t c = 0; c < q; ++c) {
      Vec img = project(action_[i].apply(unit_vec(f, dim_, t[c])));
      for (std::size_t r = 0; r < q; ++r) m.at(r, c) = img[r];
    }
    action.push_back(std::move(m));
  }
  FDModule mod;
  mod.alg_ = alg_;
  mod.dim_ = q;
  mod.action_ = std::move(action);
  return mod;
}

bool operator==(const FDModule& a, const FDModule& b) {
  return a.alg_ == b.alg_ && a.dim_ == b.dim_ && a.action_ == b.action_;
}

LeftQuotient left_quotient_context(const OneSidedIdeal& l) {
  if (l.side() != Side::Left) fail(Errc::SideMismatch, "left quotient of a right ideal");
  const AlgebraSC::Ptr& alg = l.algebra();
  const FieldCtx f = alg->field();
  const std::size_t dim = alg->dim();
  const Subspace& sp = l.space();
  const std::vector<std::size_t> t = sp.nonpivots();
  const std::size_t q = t.size();

  Mat projection(f, q, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    Vec r = sp.reduce(unit_vec(f, dim, col));
    for (std::size_t s = 0; s < q; ++s) projection.at(s, col) = r[t[s]];
  }
  Mat section(f, dim, q);
  for (std::size_t s = 0; s < q; ++s) section.at(t[s], s) = Scalar::one(f);

  return {FDModule::regular(alg).quotient(sp), sp, std::move(projection), std::move(section)};
}

FDModule quotient_by_ideal(const OneSidedIdeal& l) {
  FDModule whole = (l.side() == Side::Left) ? FDModule::regular(l.algebra())
                                            : right_regular_module(l.algebra());
  return whole.quotient(l.space());
}

Subspace spin(const FDModule& m, const std::vector<Vec>& generators) {
  const FieldCtx f = m.algebra()->field();
  Subspace s = Subspace::span(f, m.dim(), generators);
  bool grown = true;
  while (grown) {
    grown = false;
    for (std::size_t r = 0; r < s.dim() && !grown; ++r) {
      Vec v = s.basis().row(r);
      for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
        Vec w = m.action(i).apply(v);
        if (!s.contains(w)) {
          s = s + Subspace::span(f, m.dim(), {w});
          grown = true;
          break;
        }
      }
    }
  }
  return s;
}

Subspace radical_submodule(const FDModule& m) {
  const Subspace& rad = dickson_radical(m.algebra());
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < rad.dim(); ++r) {
    Mat act = m.action_of(rad.basis().row(r));
    for (std::size_t j = 0; j < m.dim(); ++j) gens.push_back(act.col(j));
  }
  // rad M is already a submodule (the radical is two-sided), so the plain
  // span suffices; spin would be a no-op
  return Subspace::span(m.algebra()->field(), m.dim(), gens);
}

bool is_semisimple_module(const FDModule& m) {
  const Subspace& rad = dickson_radical(m.algebra());
  for (std::size_t r = 0; r < rad.dim(); ++r) {
    if (!m.action_of(rad.basis().row(r)).is_zero()) return false;
  }
  return true;
}

namespace {

// Lift a subspace expressed in sub's coordinates back to ambient coordinates.
Subspace lift_through(const Subspace& sub, const Subspace& inner) {
  std::vector<Vec> rows;
  const Mat bt = sub.basis().transpose();
  for (std::size_t r = 0; r < inner.dim(); ++r) rows.push_back(bt.apply(inner.basis().row(r)));
  return Subspace::span(sub.field(), sub.ambient(), rows);
}

// One descent step: any proper nonzero submodule found, else nullopt.
// Deterministic: basis spins (lex-least), then seeded kernel candidates.
std::optional<Subspace> find_proper_submodule(const FDModule& n, std::mt19937_64& rng) {
  const FieldCtx f = n.algebra()->field();
  const std::size_t k = n.dim();

  std::optional<Subspace> best;
  for (std::size_t i = 0; i < k; ++i) {
    Subspace s = spin(n, {unit_vec(f, k, i)});
    if (s.dim() < k && (!best || subspace_less(s, *best))) best = s;
  }
  if (best) return best;

  const std::size_t budget =
      f.is_prime_field() ? 64 * static_cast<std::size_t>(f.characteristic()) : 64;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Vec a = random_vec(f, n.algebra()->dim(), rng);
    Mat ker = null_space(n.action_of(a));
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      Subspace s = spin(n, {ker.row(r)});
      if (s.dim() > 0 && s.dim() < k) return s;
    }
  }
  return std::nullopt;
}

// Exhaustive spin scan over projective representatives; returns a proper
// submodule if one exists, nullopt when every vector regenerates the module.
std::optional<Subspace> exhaustive_scan(const FDModule& n) {
  const FieldCtx f = n.algebra()->field();
  const std::uint64_t q = f.characteristic();
  const std::size_t k = n.dim();
  std::vector<std::uint64_t> digits(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(digits.begin(), digits.end(), 0);
    bool done = false;
    while (!done) {
      Vec v = zero_vec(f, k);
      v[lead] = Scalar::one(f);
      for (std::size_t i = lead + 1; i < k; ++i) v[i] = Scalar::of_residue(f, digits[i]);
      Subspace s = spin(n, {v});
      if (s.dim() < k) return s;
      done = true;
      for (std::size_t i = k; i-- > lead + 1;) {
        if (++digits[i] < q) {
          done = false;
          break;
        }
        digits[i] = 0;
      }
    }
  }
  return std::nullopt;
}

long double projective_count(std::uint64_t q, std::size_t k) {
  long double reps = 0, power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    reps += power;
    power *= static_cast<long double>(q);
  }
  return reps;
}

constexpr long double kScanCap = 250000.0L;

Subspace simple_descend(const FDModule& n, std::mt19937_64& rng) {
  const FieldCtx f = n.algebra()->field();
  const std::size_t k = n.dim();
  if (k == 0) fail(Errc::InvalidSpec, "simple submodule of the zero module");

  if (auto proper = find_proper_submodule(n, rng)) {
    return lift_through(*proper, simple_descend(n.restricted(*proper), rng));
  }

  // certification: every kernel-vector candidate from 10 seeded elements
  // must regenerate the module ...
  for (int t = 0; t < 10; ++t) {
    Vec a = random_vec(f, n.algebra()->dim(), rng);
    Mat ker = null_space(n.action_of(a));
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      Subspace s = spin(n, {ker.row(r)});
      if (s.dim() < k) {
        return lift_through(s, simple_descend(n.restricted(s), rng));
      }
    }
  }
  // ... and at small dimension an exhaustive spin scan confirms
  if (k <= 6) {
    if (!f.is_prime_field() || projective_count(f.characteristic(), k) > kScanCap) {
      fail(Errc::ChopInconclusive,
           "cannot run the exhaustive scan for a dim-" + std::to_string(k) + " module over " +
               f.to_string());
    }
    if (auto proper = exhaustive_scan(n)) {
      return lift_through(*proper, simple_descend(n.restricted(*proper), rng));
    }
  }
  return Subspace::full(f, k);
}

}  // namespace

Subspace simple_submodule(const FDModule& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  return simple_descend(m, rng);
}

LengthValue composition_length(const FDModule& m, std::uint64_t seed) {
  const FieldCtx f = m.algebra()->field();
  if (f.is_rationals()) {
    fail(Errc::UnsupportedField, "composition length needs a prime field");
  }
  if (m.dim() == 0) return LengthValue::finite(0);

  // radical filtration: len(M) = len(M / rad M) + len(rad M)
  Subspace rad = radical_submodule(m);
  if (rad.dim() == m.dim()) {
    fail(Errc::InternalCheckFailed, "rad M = M on a nonzero module");
  }

  // chop the semisimple top layer one certified simple at a time
  FDModule layer = m.quotient(rad);
  std::size_t count = 0;
  while (layer.dim() > 0) {
    Subspace w = simple_submodule(layer, seed + count);
    layer = layer.quotient(w);
    ++count;
  }

  LengthValue rest = rad.is_zero() ? LengthValue::finite(0)
                                   : composition_length(m.restricted(rad), seed);
  return LengthValue::finite(count) + rest;
}

Subspace module_complement(const FDModule& m, const Subspace& u) {
  const FieldCtx f = m.algebra()->field();
  const std::size_t n = m.dim();
  if (u.ambient() != n) fail(Errc::AmbientMismatch, "complement ambient mismatch");
  if (!m.is_submodule(u)) fail(Errc::InvalidSpec, "complement of a non-submodule");

  // Solve for an equivariant projection T with T|u = id and im(T) <= u;
  // its kernel is then an invariant complement. Unknown T is n x n,
  // flattened row-major.
  const std::size_t nn = n * n;
  auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };

  // reduction against u as a matrix: Rd x = x - sum_r x[piv_r] * basis_r
  Mat rd = Mat::identity(f, n);
  for (std::size_t r = 0; r < u.dim(); ++r) {
    const std::size_t piv = u.pivots()[r];
    for (std::size_t t = 0; t < n; ++t) rd.at(t, piv) -= u.basis().at(r, t);
  }

  const std::size_t adim = m.algebra()->dim();
  Mat sys(f, adim * nn + u.dim() * n + nn, nn);
  Vec rhs;
  rhs.reserve(sys.rows());
  std::size_t row = 0;

  // equivariance: T A_i = A_i T
  for (std::size_t i = 0; i < adim; ++i) {
    const Mat& ai = m.action(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t s = 0; s < n; ++s) {
          sys.at(row, idx(r, s)) += ai.at(s, c);
          sys.at(row, idx(s, c)) -= ai.at(r, s);
        }
        rhs.push_back(Scalar::zero(f));
        ++row;
      }
  }
  // T fixes u pointwise
  for (std::size_t r = 0; r < u.dim(); ++r) {
    Vec ur = u.basis().row(r);
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t c = 0; c < n; ++c) sys.at(row, idx(t, c)) = ur[c];
      rhs.push_back(ur[t]);
      ++row;
    }
  }
  // image inside u: Rd T = 0
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t s = 0; s < n; ++s) sys.at(row, idx(s, c)) += rd.at(t, s);
      rhs.push_back(Scalar::zero(f));
      ++row;
    }

  auto sol = solve(sys, rhs);
  if (!sol) {
    fail(Errc::InternalCheckFailed, "no equivariant projection (module not semisimple?)");
  }
  Mat t(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = (*sol)[idx(r, c)];

  Subspace comp = Subspace::row_space(null_space(t));
  if (comp.dim() + u.dim() != n || !intersect(comp, u).is_zero() || !m.is_submodule(comp)) {
    fail(Errc::InternalCheckFailed, "projection kernel is not a complement");
  }
  return comp;
}

std::optional<std::vector<OneSidedIdeal>> semi_maximal_witness(const OneSidedIdeal& l) {
  if (l.side() != Side::Left) fail(Errc::SideMismatch, "semi-maximal witness needs a left ideal");
  const AlgebraSC::Ptr& alg = l.algebra();
  LeftQuotient ctx = left_quotient_context(l);
  const FDModule& m = ctx.module;

  if (m.dim() == 0) return std::vector<OneSidedIdeal>{};  // L = A: empty intersection
  if (!is_semisimple_module(m)) return std::nullopt;

  // decompose A/L into simple summands W_1 + ... + W_n
  std::vector<Subspace> parts;
  Subspace acc = Subspace::zero(m.algebra()->field(), m.dim());
  while (acc.dim() < m.dim()) {
    Subspace rest = acc.is_zero() ? Subspace::full(m.algebra()->field(), m.dim())
                                  : module_complement(m, acc);
    Subspace w = lift_through(rest, simple_submodule(m.restricted(rest), 0x6d617857ull + parts.size()));
    parts.push_back(w);
    acc = acc + w;
  }

  // m_j = preimage of (sum of all parts except W_j); their intersection is L
  std::vector<OneSidedIdeal> out;
  const Mat& section = ctx.section;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < l.space().dim(); ++r) gens.push_back(l.space().basis().row(r));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i == j) continue;
      for (std::size_t r = 0; r < parts[i].dim(); ++r) {
        gens.push_back(section.apply(parts[i].basis().row(r)));
      }
    }
    out.push_back(OneSidedIdeal::left(alg, Subspace::span(alg->field(), alg->dim(), gens)));
  }

  Subspace meet = Subspace::full(alg->field(), alg->dim());
  for (const OneSidedIdeal& mj : out) meet = intersect(meet, mj.space());
  if (!(meet == l.space())) {
    fail(Errc::InternalCheckFailed, "maximal ideals do not intersect to L");
  }
  return out;
}

namespace {

// Certified simplicity of a whole module: nonzero and its only nonzero
// submodule is everything.
bool certify_simple_module(const FDModule& m, std::uint64_t seed) {
  if (m.dim() == 0) return false;
  return simple_submodule(m, seed).is_full();
}

}  // namespace

Element min_complement_q(const OneSidedIdeal& l) {
  if (l.side() != Side::Left) fail(Errc::SideMismatch, "min-complement needs a left ideal");
  const AlgebraSC::Ptr& alg = l.algebra();
  if (l.is_full()) fail(Errc::FullIdeal, "no complement element for L = A");

  LeftQuotient ctx = left_quotient_context(l);
  const FDModule& m = ctx.module;
  if (!is_semisimple_module(m)) {
    fail(Errc::NotSemisimpleQuotient, "A/L is not semisimple");
  }

  // minimal submodule N, invariant complement C, and the decomposition
  // [1] = [q] + [c] with [q] in N
  const FieldCtx f = alg->field();
  Subspace n = simple_submodule(m, 0x6d696e51ull);
  Subspace c = n.is_full() ? Subspace::zero(f, m.dim()) : module_complement(m, n);

  Vec one_bar = ctx.projection.apply(alg->unit());
  Mat basis_cols(f, m.dim(), n.dim() + c.dim());
  for (std::size_t r = 0; r < n.dim(); ++r)
    for (std::size_t t = 0; t < m.dim(); ++t) basis_cols.at(t, r) = n.basis().at(r, t);
  for (std::size_t r = 0; r < c.dim(); ++r)
    for (std::size_t t = 0; t < m.dim(); ++t) basis_cols.at(t, n.dim() + r) = c.basis().at(r, t);
  auto y = solve(basis_cols, one_bar);
  if (!y) fail(Errc::InternalCheckFailed, "unit image not decomposable over N + C");

  Vec q_bar = zero_vec(f, m.dim());
  for (std::size_t r = 0; r < n.dim(); ++r) {
    q_bar = add(q_bar, scale((*y)[r], n.basis().row(r)));
  }
  Vec q = ctx.section.apply(q_bar);

  // the three defining checks are the contract; refuse to return otherwise
  if (l.space().contains(q)) fail(Errc::InternalCheckFailed, "q landed inside L");
  for (std::size_t r = 0; r < l.space().dim(); ++r) {
    if (!l.space().contains(alg->mul_coords(l.space().basis().row(r), q))) {
      fail(Errc::InternalCheckFailed, "Lq is not contained in L");
    }
  }
  Subspace sum = l.space() + principal_left(alg, sub(alg->unit(), q)).space();
  OneSidedIdeal big = OneSidedIdeal::left(alg, sum);
  if (big.is_full() || !certify_simple_module(quotient_by_ideal(big), 0x6d696e51ull)) {
    fail(Errc::InternalCheckFailed, "L + A(1-q) is not a maximal left ideal");
  }
  return Element(alg, q);
}

// ---- module maps ----------------------------------------------------------

ModuleMap::ModuleMap(FDModule source, FDModule target, Mat matrix)
    : src_(std::move(source)), tgt_(std::move(target)), mat_(std::move(matrix)) {
  if (src_.algebra() != tgt_.algebra()) {
    fail(Errc::AlgebraMismatch, "module map between different algebras");
  }
  if (mat_.rows() != tgt_.dim() || mat_.cols() != src_.dim()) {
    fail(Errc::DimensionMismatch, "map matrix must be target_dim x source_dim");
  }
  for (std::size_t i = 0; i < src_.algebra()->dim(); ++i) {
    if (!(kernels::mul(mat_, src_.action(i)) == kernels::mul(tgt_.action(i), mat_))) {
      fail(Errc::InvalidSpec, "map is not equivariant on basis element " + std::to_string(i),
           {static_cast<long>(i), -1, -1});
    }
  }
}

Subspace ModuleMap::kernel() const { return Subspace::row_space(null_space(mat_)); }

Subspace ModuleMap::image() const { return Subspace::row_space(mat_.transpose()); }

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
  if (!(inner.tgt_ == src_)) {
    fail(Errc::DimensionMismatch, "composition needs inner target = outer source");
  }
  return ModuleMap(inner.src_, tgt_, kernels::mul(mat_, inner.mat_));
}

std::vector<ModuleMap> hom_space(const FDModule& m, const FDModule& n) {
  if (m.algebra() != n.algebra()) fail(Errc::AlgebraMismatch, "hom between different algebras");
  const FieldCtx f = m.algebra()->field();
  const std::size_t sm = m.dim(), sn = n.dim();
  const std::size_t unknowns = sn * sm;
  if (unknowns == 0) return {};
  auto idx = [sm](std::size_t r, std::size_t c) { return r * sm + c; };

  const std::size_t adim = m.algebra()->dim();
  Mat sys(f, adim * sn * sm, unknowns);
  std::size_t row = 0;
  // T act_m(b_i) = act_n(b_i) T
  for (std::size_t i = 0; i < adim; ++i) {
    const Mat& am = m.action(i);
    const Mat& an = n.action(i);
    for (std::size_t r = 0; r < sn; ++r)
      for (std::size_t c = 0; c < sm; ++c) {
        for (std::size_t s = 0; s < sm; ++s) sys.at(row, idx(r, s)) += am.at(s, c);
        for (std::size_t s = 0; s < sn; ++s) sys.at(row, idx(s, c)) -= an.at(r, s);
        ++row;
      }
  }

  Mat basis = null_space(sys);
  std::vector<ModuleMap> out;
  out.reserve(basis.rows());
  for (std::size_t b = 0; b < basis.rows(); ++b) {
    Mat t(f, sn, sm);
    for (std::size_t r = 0; r < sn; ++r)
      for (std::size_t c = 0; c < sm; ++c) t.at(r, c) = basis.at(b, idx(r, c));
    out.emplace_back(m, n, std::move(t));
  }
  return out;
}

std::optional<long long> module_map_index(const ModuleMap& f) {
  LengthValue klen = composition_length(f.source().restricted(f.kernel()));
  LengthValue clen = composition_length(f.target().quotient(f.image()));
  if (!klen.is_finite() || !clen.is_finite()) return std::nullopt;
  return static_cast<long long>(klen.value()) - static_cast<long long>(clen.value());
}

}  // namespace soclelab
