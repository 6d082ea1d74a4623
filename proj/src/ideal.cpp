#include "soclelab/ideal.hpp"

#include <random>

#include "soclelab/error.hpp"

namespace soclelab {

namespace {

void check_ideal_closure(Side side, const AlgebraSC::Ptr& alg, const Subspace& sp) {
  if (sp.ambient() != alg->dim()) fail(Errc::AmbientMismatch, "ideal ambient != algebra dim");
  if (sp.field() != alg->field()) fail(Errc::FieldMismatch, "ideal field != algebra field");
  const std::size_t dim = alg->dim();
  for (std::size_t i = 0; i < dim; ++i) {
    Vec ei = unit_vec(alg->field(), dim, i);
    for (std::size_t r = 0; r < sp.dim(); ++r) {
      Vec v = sp.basis().row(r);
      Vec prod = (side == Side::Left) ? alg->mul_coords(ei, v) : alg->mul_coords(v, ei);
      if (!sp.contains(prod)) {
        fail(Errc::InvalidSpec,
             std::string("subspace is not a ") + (side == Side::Left ? "left" : "right") +
                 " ideal (basis " + std::to_string(i) + ", row " + std::to_string(r) + ")",
             {static_cast<long>(i), static_cast<long>(r), -1});
      }
    }
  }
}

}  // namespace

OneSidedIdeal OneSidedIdeal::left(AlgebraSC::Ptr alg, Subspace space) {
  check_ideal_closure(Side::Left, alg, space);
  return OneSidedIdeal(Side::Left, std::move(alg), std::move(space));
}

OneSidedIdeal OneSidedIdeal::right(AlgebraSC::Ptr alg, Subspace space) {
  check_ideal_closure(Side::Right, alg, space);
  return OneSidedIdeal(Side::Right, std::move(alg), std::move(space));
}

OneSidedIdeal principal_left(const AlgebraSC::Ptr& alg, const Vec& a) {
  // Aa = image of x -> xa = column space of right_regular(a)
  return OneSidedIdeal::left(alg, Subspace::row_space(alg->right_regular(a).transpose()));
}

OneSidedIdeal principal_right(const AlgebraSC::Ptr& alg, const Vec& a) {
  return OneSidedIdeal::right(alg, Subspace::row_space(alg->left_regular(a).transpose()));
}

OneSidedIdeal principal_left(const Element& a) { return principal_left(a.algebra(), a.coords()); }
OneSidedIdeal principal_right(const Element& a) { return principal_right(a.algebra(), a.coords()); }

namespace {

// Intersection of the kernels of one regular representation per element of s.
Subspace annihilator_space(const AlgebraSC::Ptr& alg, const std::vector<Vec>& s, Side which) {
  if (s.empty()) fail(Errc::InvalidSpec, "annihilator of an empty set");
  const std::size_t dim = alg->dim();
  Mat stacked(alg->field(), dim * s.size(), dim);
  for (std::size_t t = 0; t < s.size(); ++t) {
    // lan: x*s = 0 <=> right_regular(s) x = 0; ran: s*x = 0 <=> left_regular(s) x = 0
    Mat m = (which == Side::Left) ? alg->right_regular(s[t]) : alg->left_regular(s[t]);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) stacked.at(t * dim + i, j) = m.at(i, j);
  }
  return Subspace::row_space(null_space(stacked));
}

}  // namespace

OneSidedIdeal lan(const AlgebraSC::Ptr& alg, const std::vector<Vec>& s) {
  return OneSidedIdeal::left(alg, annihilator_space(alg, s, Side::Left));
}

OneSidedIdeal ran(const AlgebraSC::Ptr& alg, const std::vector<Vec>& s) {
  return OneSidedIdeal::right(alg, annihilator_space(alg, s, Side::Right));
}

namespace {

// Basis rows of an ideal, with the zero element standing in for the empty
// basis so that the zero ideal annihilates to the full algebra.
std::vector<Vec> ideal_probe_set(const OneSidedIdeal& l) {
  std::vector<Vec> gens;
  gens.reserve(l.dim() + 1);
  for (std::size_t r = 0; r < l.dim(); ++r) gens.push_back(l.space().basis().row(r));
  if (gens.empty()) gens.push_back(zero_vec(l.algebra()->field(), l.algebra()->dim()));
  return gens;
}

}  // namespace

OneSidedIdeal lan(const OneSidedIdeal& l) { return lan(l.algebra(), ideal_probe_set(l)); }

OneSidedIdeal ran(const OneSidedIdeal& l) { return ran(l.algebra(), ideal_probe_set(l)); }

namespace {

std::vector<Vec> element_coords(const std::vector<Element>& s) {
  if (s.empty()) fail(Errc::InvalidSpec, "annihilator of an empty set");
  std::vector<Vec> out;
  out.reserve(s.size());
  for (const Element& e : s) {
    if (e.algebra() != s.front().algebra()) {
      fail(Errc::AlgebraMismatch, "annihilator set spans different algebras");
    }
    out.push_back(e.coords());
  }
  return out;
}

}  // namespace

OneSidedIdeal lan(const std::vector<Element>& s) {
  return lan(s.front().algebra(), element_coords(s));
}

OneSidedIdeal ran(const std::vector<Element>& s) {
  return ran(s.front().algebra(), element_coords(s));
}

std::optional<IdempotentWitness> idempotent_generator(const OneSidedIdeal& l) {
  const AlgebraSC::Ptr& alg = l.algebra();
  const FieldCtx f = alg->field();
  const std::size_t dim = alg->dim();
  const std::size_t k = l.dim();

  if (k == 0) {
    return IdempotentWitness{Element::zero(alg), IdempotentWitness::Property::GeneratesIdeal, l};
  }

  // e = B^T y constrained to act as a one-sided identity on every basis row:
  // left ideals need v_i e = v_i, right ideals e v_i = v_i.
  const Mat bt = l.space().basis().transpose();  // dim x k
  Mat sys(f, k * dim, k);
  Vec rhs;
  rhs.reserve(k * dim);
  for (std::size_t i = 0; i < k; ++i) {
    Vec vi = l.space().basis().row(i);
    Mat rep = (l.side() == Side::Left) ? alg->left_regular(vi) : alg->right_regular(vi);
    Mat block = kernels::mul(rep, bt);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < k; ++c) sys.at(i * dim + r, c) = block.at(r, c);
      rhs.push_back(vi[r]);
    }
  }

  auto y = solve(sys, rhs);
  if (!y) return std::nullopt;

  Vec e = bt.apply(*y);
  if (alg->mul_coords(e, e) != e) {
    fail(Errc::InternalCheckFailed, "identity solution is not idempotent");
  }
  const Subspace regenerated = (l.side() == Side::Left) ? principal_left(alg, e).space()
                                                        : principal_right(alg, e).space();
  if (!(regenerated == l.space())) {
    fail(Errc::InternalCheckFailed, "idempotent does not regenerate its ideal");
  }
  return IdempotentWitness{Element(alg, e), IdempotentWitness::Property::GeneratesIdeal, l};
}

bool IdempotentWitness::verify() const {
  const AlgebraSC::Ptr& alg = p.algebra();
  if (!(p * p == p)) return false;
  switch (property) {
    case Property::GeneratesIdeal: {
      const Subspace s = (context.side() == Side::Left) ? principal_left(p).space()
                                                        : principal_right(p).space();
      return s == context.space();
    }
    case Property::MinimalIdempotent: {
      const Subspace s = (context.side() == Side::Left) ? principal_left(p).space()
                                                        : principal_right(p).space();
      if (!(s == context.space()) || context.is_zero()) return false;
      return minimal_subideal(context, 0).space() == context.space();
    }
    case Property::ComplementOfFredholm: {
      // context = lan({p}) = A(1-p) (left) or ran({p}) = (1-p)A (right)
      const Subspace s = (context.side() == Side::Left)
                             ? lan(alg, {p.coords()}).space()
                             : ran(alg, {p.coords()}).space();
      return s == context.space();
    }
  }
  return false;
}

const Subspace& dickson_radical(const AlgebraSC::Ptr& a) {
  return a->memo_radical([&]() -> Subspace {
    const FieldCtx f = a->field();
    const std::size_t dim = a->dim();
    if (dim == 0) return Subspace::zero(f, 0);
    if (f.is_prime_field() && f.characteristic() <= dim) {
      fail(Errc::CharacteristicTooSmall,
           "trace-form radical needs char 0 or p > dim; got p = " +
               std::to_string(f.characteristic()) + ", dim = " + std::to_string(dim),
           {static_cast<long>(f.characteristic()), static_cast<long>(dim), -1});
    }

    // t[l] = trace of left multiplication by basis l; the Gram matrix of the
    // trace form is then G[i][j] = sum_l (b_i b_j)_l t[l]
    Vec t = zero_vec(f, dim);
    for (std::size_t l = 0; l < dim; ++l) {
      for (std::size_t k = 0; k < dim; ++k) t[l] += a->basis_product(l, k)[k];
    }
    Mat g(f, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        Scalar acc = Scalar::zero(f);
        const Vec& prod = a->basis_product(i, j);
        for (std::size_t l = 0; l < dim; ++l) {
          if (!prod[l].is_zero()) acc += prod[l] * t[l];
        }
        g.at(i, j) = acc;
      }
    }
    return Subspace::row_space(null_space(g));
  });
}

bool is_semiprime(const AlgebraSC::Ptr& a) { return dickson_radical(a).is_zero(); }

Subspace ring_socle(const AlgebraSC::Ptr& a) {
  if (!is_semiprime(a)) {
    fail(Errc::NotSemiprime, "socle requested for a non-semiprime algebra " + a->name());
  }
  // finite-dimensional semiprime = semisimple, so the socle is everything
  return Subspace::full(a->field(), a->dim());
}

namespace {

// Lexicographic order on (pivot sequence, basis entries) used for the
// deterministic candidate tie-break.
bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.pivots() != b.pivots()) return a.pivots() < b.pivots();
  const Mat &ma = a.basis(), &mb = b.basis();
  for (std::size_t i = 0; i < ma.rows(); ++i)
    for (std::size_t j = 0; j < ma.cols(); ++j) {
      int c = Scalar::compare(ma.at(i, j), mb.at(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

Subspace principal_space(const AlgebraSC::Ptr& alg, Side side, const Vec& v) {
  Mat rep = (side == Side::Left) ? alg->right_regular(v) : alg->left_regular(v);
  return Subspace::row_space(rep.transpose());
}

}  // namespace

OneSidedIdeal minimal_subideal(const OneSidedIdeal& l, std::uint64_t seed) {
  if (l.is_zero()) fail(Errc::InvalidSpec, "minimal subideal of the zero ideal");
  const AlgebraSC::Ptr& alg = l.algebra();
  const FieldCtx f = alg->field();
  const std::size_t dim = alg->dim();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

  Subspace current = l.space();
  for (;;) {
    const std::size_t k = current.dim();
    const Mat bt = current.basis().transpose();  // dim x k

    // 1) deterministic pre-pass: principal ideals of the basis rows; among
    //    the proper ones descend into the lexicographically least
    std::optional<Subspace> best;
    for (std::size_t r = 0; r < k; ++r) {
      Subspace cand = principal_space(alg, l.side(), current.basis().row(r));
      if (cand.dim() > 0 && cand.dim() < k && (!best || subspace_less(cand, *best))) {
        best = cand;
      }
    }
    if (best) {
      current = *best;
      continue;
    }

    // 2) seeded search: u = pxp for random x; any vector of the ideal killed
    //    by u (on the ideal side) generates a proper subideal, because the
    //    generator p cannot lie in it while u != 0
    auto gen = idempotent_generator(
        (l.side() == Side::Left) ? OneSidedIdeal::left(alg, current)
                                 : OneSidedIdeal::right(alg, current));
    if (!gen) fail(Errc::InternalCheckFailed, "semisimple ideal without idempotent generator");
    const Vec p = gen->p.coords();

    const std::size_t budget =
        f.is_prime_field() ? 64 * static_cast<std::size_t>(f.characteristic()) : 64;
    std::optional<Vec> found;
    for (std::size_t attempt = 0; attempt < budget && !found; ++attempt) {
      Vec x(dim, Scalar::zero(f));
      for (std::size_t i = 0; i < dim; ++i) {
        if (f.is_prime_field()) {
          std::uniform_int_distribution<std::uint64_t> d(0, f.characteristic() - 1);
          x[i] = Scalar::of_residue(f, d(rng));
        } else {
          std::uniform_int_distribution<long long> d(-5, 5);
          x[i] = Scalar::of(f, d(rng));
        }
      }
      Vec u = alg->mul_coords(alg->mul_coords(p, x), p);
      if (is_zero_vec(u)) continue;
      // kernel of the action of u on the ideal: v = bt*y with v.u = 0 (left)
      Mat rep = (l.side() == Side::Left) ? alg->right_regular(u) : alg->left_regular(u);
      Mat restricted = kernels::mul(rep, bt);  // dim x k
      Mat ker = null_space(restricted);
      if (ker.rows() > 0) found = bt.apply(ker.row(0));
    }
    if (found) {
      Subspace cand = principal_space(alg, l.side(), *found);
      if (cand.dim() == 0 || cand.dim() >= k) {
        fail(Errc::InternalCheckFailed, "kernel vector did not give a proper subideal");
      }
      current = cand;
      continue;
    }

    // 3) certification: exhaustive scan over projective representatives when
    //    feasible; every generated ideal equal to the current one proves
    //    minimality
    if (f.is_prime_field()) {
      const std::uint64_t q = f.characteristic();
      // (q^k - 1) / (q - 1) representatives, guarded against overflow
      long double reps = 0;
      long double power = 1;
      for (std::size_t i = 0; i < k; ++i) {
        reps += power;
        power *= static_cast<long double>(q);
      }
      if (reps <= 250000.0L) {
        std::optional<Subspace> proper;
        std::vector<std::uint64_t> digits(k, 0);
        // first nonzero coordinate normalized to 1: iterate its position
        for (std::size_t lead = 0; lead < k && !proper; ++lead) {
          std::fill(digits.begin(), digits.end(), 0);
          bool done = false;
          while (!done && !proper) {
            Vec y = zero_vec(f, k);
            y[lead] = Scalar::one(f);
            for (std::size_t i = lead + 1; i < k; ++i) y[i] = Scalar::of_residue(f, digits[i]);
            Subspace cand = principal_space(alg, l.side(), bt.apply(y));
            if (cand.dim() > 0 && cand.dim() < k) proper = cand;
            // increment the free digits
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
        if (proper) {
          current = *proper;
          continue;
        }
        return (l.side() == Side::Left) ? OneSidedIdeal::left(alg, current)
                                        : OneSidedIdeal::right(alg, current);
      }
    }
    fail(Errc::ChopInconclusive,
         "cannot certify minimality of a dim-" + std::to_string(k) + " ideal over " +
             f.to_string());
  }
}

LengthValue order(const OneSidedIdeal& l) {
  const AlgebraSC::Ptr& alg = l.algebra();
  if (!is_semiprime(alg)) {
    fail(Errc::NotSemiprime, "order is defined over semiprime algebras only");
  }
  if (l.is_zero()) return LengthValue::finite(0);
  if (l.algebra()->field().is_rationals()) {
    fail(Errc::UnsupportedField, "order needs a prime field (minimality search)");
  }

  std::size_t count = 0;
  Subspace current = l.space();
  while (!current.is_zero()) {
    OneSidedIdeal cur = (l.side() == Side::Left) ? OneSidedIdeal::left(alg, current)
                                                 : OneSidedIdeal::right(alg, current);
    OneSidedIdeal w = minimal_subideal(cur, 0x6f726465ull + count);
    auto gen = idempotent_generator(w);
    if (!gen) fail(Errc::InternalCheckFailed, "minimal ideal without idempotent generator");

    // L = Ap + (L n A(1-p)), a direct sum: peel one minimal summand
    Vec one_minus_p = sub(alg->unit(), gen->p.coords());
    Subspace complement = principal_space(alg, l.side(), one_minus_p);
    Subspace next = intersect(current, complement);
    if (next.dim() + w.dim() != current.dim()) {
      fail(Errc::InternalCheckFailed, "minimal peel is not a direct summand");
    }
    current = next;
    ++count;
  }
  return LengthValue::finite(count);
}

}  // namespace soclelab
