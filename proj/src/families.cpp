#include "soclelab/families.hpp"

#include <array>
#include <algorithm>

#include "soclelab/error.hpp"

namespace soclelab {

AlgebraSC::Ptr matrix_algebra(std::size_t n, FieldCtx f) {
  if (n == 0) fail(Errc::InvalidSpec, "matrix algebra needs n >= 1");
  const std::size_t dim = n * n;
  const Scalar one = Scalar::one(f);

  // E_ab * E_cd = [b == c] E_ad
  std::vector<ScEntry> mult;
  mult.reserve(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        mult.push_back({matrix_unit_index(n, a, b), matrix_unit_index(n, b, c),
                        matrix_unit_index(n, a, c), one});
      }

  Vec unit = zero_vec(f, dim);
  for (std::size_t i = 0; i < n; ++i) unit[matrix_unit_index(n, i, i)] = one;

  // transpose: E_ab -> E_ba
  Mat star(f, dim, dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      star.at(matrix_unit_index(n, b, a), matrix_unit_index(n, a, b)) = one;
    }

  return AlgebraSC::build(f, dim, std::move(mult), std::move(unit), std::move(star),
                          "M" + std::to_string(n));
}

AlgebraSC::Ptr direct_product(const AlgebraSC::Ptr& a, const AlgebraSC::Ptr& b) {
  if (a->field() != b->field()) fail(Errc::FieldMismatch, "direct product over different fields");
  const FieldCtx f = a->field();
  const std::size_t da = a->dim(), dim = da + b->dim();

  std::vector<ScEntry> mult;
  mult.reserve(a->entries().size() + b->entries().size());
  for (const ScEntry& e : a->entries()) mult.push_back(e);
  for (const ScEntry& e : b->entries()) mult.push_back({e.i + da, e.j + da, e.k + da, e.c});

  Vec unit = a->unit();
  unit.insert(unit.end(), b->unit().begin(), b->unit().end());

  std::optional<Mat> star;
  if (a->has_involution() && b->has_involution()) {
    Mat s(f, dim, dim);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) s.at(i, j) = a->involution().at(i, j);
    for (std::size_t i = da; i < dim; ++i)
      for (std::size_t j = da; j < dim; ++j) s.at(i, j) = b->involution().at(i - da, j - da);
    star = std::move(s);
  }

  return AlgebraSC::build(f, dim, std::move(mult), std::move(unit), std::move(star),
                          a->name() + "x" + b->name());
}

AlgebraSC::Ptr group_algebra(const std::vector<std::vector<std::size_t>>& table, FieldCtx f,
                             std::string name) {
  const std::size_t n = table.size();
  if (n == 0) fail(Errc::NotAGroup, "empty Cayley table");
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) fail(Errc::NotAGroup, "Cayley table is not square");
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] >= n) {
        fail(Errc::NotAGroup, "Cayley table entry out of range",
             {static_cast<long>(g), static_cast<long>(h), -1});
      }
    }
  }

  // identity
  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n; ++g) ok = ok && table[e][g] == g && table[g][e] == g;
    if (ok) id = e;
  }
  if (id == n) fail(Errc::NotAGroup, "no identity element");

  // associativity on all triples
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          fail(Errc::NotAGroup, "Cayley table is not associative",
               {static_cast<long>(a), static_cast<long>(b), static_cast<long>(c)});
        }
      }

  // two-sided inverses
  std::vector<std::size_t> inv(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] == id && table[h][g] == id) {
        inv[g] = h;
        break;
      }
    }
    if (inv[g] == n) {
      fail(Errc::NotAGroup, "element has no inverse", {static_cast<long>(g), -1, -1});
    }
  }

  const Scalar one = Scalar::one(f);
  std::vector<ScEntry> mult;
  mult.reserve(n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) mult.push_back({g, h, table[g][h], one});

  // standard involution g -> g^{-1}, extended linearly
  Mat star(f, n, n);
  for (std::size_t g = 0; g < n; ++g) star.at(inv[g], g) = one;

  return AlgebraSC::build(f, n, std::move(mult), unit_vec(f, n, id), std::move(star),
                          std::move(name));
}

std::size_t triangular_unit_index(std::size_t n, std::size_t r, std::size_t c) {
  if (r > c || c >= n) fail(Errc::InvalidSpec, "triangular index needs r <= c < n");
  // pairs (r,c), r <= c, in row-major order
  return r * n - r * (r - 1) / 2 + (c - r);
}

AlgebraSC::Ptr upper_triangular_algebra(std::size_t n, FieldCtx f) {
  if (n == 0) fail(Errc::InvalidSpec, "triangular algebra needs n >= 1");
  const std::size_t dim = n * (n + 1) / 2;
  const Scalar one = Scalar::one(f);

  std::vector<ScEntry> mult;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t d = b; d < n; ++d) {
        // E_ab * E_bd = E_ad; all other matrix-unit products vanish in the space
        mult.push_back({triangular_unit_index(n, a, b), triangular_unit_index(n, b, d),
                        triangular_unit_index(n, a, d), one});
      }

  Vec unit = zero_vec(f, dim);
  for (std::size_t i = 0; i < n; ++i) unit[triangular_unit_index(n, i, i)] = one;

  return AlgebraSC::build(f, dim, std::move(mult), std::move(unit), std::nullopt,
                          "T" + std::to_string(n));
}

QuotientAlgebra quotient_algebra(const AlgebraSC::Ptr& a, const Subspace& ideal) {
  const FieldCtx f = a->field();
  const std::size_t dim = a->dim();
  if (ideal.ambient() != dim) fail(Errc::AmbientMismatch, "ideal ambient != algebra dim");
  if (ideal.field() != f) fail(Errc::FieldMismatch, "ideal field != algebra field");

  // two-sidedness: b_i * v and v * b_i stay inside for every basis row v
  for (std::size_t i = 0; i < dim; ++i) {
    Vec ei = unit_vec(f, dim, i);
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      Vec v = ideal.basis().row(r);
      if (!ideal.contains(a->mul_coords(ei, v)) || !ideal.contains(a->mul_coords(v, ei))) {
        fail(Errc::NotTwoSidedIdeal,
             "subspace is not a two-sided ideal (basis " + std::to_string(i) + ", row " +
                 std::to_string(r) + ")",
             {static_cast<long>(i), static_cast<long>(r), -1});
      }
    }
  }

  if (ideal.is_full()) {
    return {AlgebraSC::zero_algebra(f), Mat(f, 0, dim), Mat(f, dim, 0)};
  }

  // quotient coordinates = non-pivot positions of the reduced remainder
  const std::vector<std::size_t> t = ideal.nonpivots();
  const std::size_t qdim = t.size();

  auto project = [&](const Vec& x) {
    Vec r = ideal.reduce(x);
    Vec q;
    q.reserve(qdim);
    for (std::size_t s : t) q.push_back(r[s]);
    return q;
  };

  Mat projection(f, qdim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    Vec q = project(unit_vec(f, dim, col));
    for (std::size_t s = 0; s < qdim; ++s) projection.at(s, col) = q[s];
  }
  Mat section(f, dim, qdim);
  for (std::size_t s = 0; s < qdim; ++s) section.at(t[s], s) = Scalar::one(f);

  std::vector<ScEntry> mult;
  for (std::size_t s1 = 0; s1 < qdim; ++s1)
    for (std::size_t s2 = 0; s2 < qdim; ++s2) {
      Vec q = project(a->mul_coords(unit_vec(f, dim, t[s1]), unit_vec(f, dim, t[s2])));
      for (std::size_t k = 0; k < qdim; ++k) {
        if (!q[k].is_zero()) mult.push_back({s1, s2, k, q[k]});
      }
    }

  auto alg = AlgebraSC::build(f, qdim, std::move(mult), project(a->unit()), std::nullopt,
                              a->name() + "/I");
  return {std::move(alg), std::move(projection), std::move(section)};
}

// ---- stock Cayley tables -------------------------------------------------

std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<std::size_t>> klein_four_table() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return t;
}

std::vector<std::vector<std::size_t>> symmetric3_table() {
  // permutations of {0,1,2}: identity first, then the two 3-cycles, then the
  // transpositions; composed as (p*q)(x) = p(q(x))
  const std::array<std::array<std::size_t, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 2, 0},  // (012)
      {2, 0, 1},  // (021)
      {1, 0, 2},  // (01)
      {2, 1, 0},  // (02)
      {0, 2, 1},  // (12)
  }};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> comp{};
      for (std::size_t x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = static_cast<std::size_t>(
          std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  return t;
}

std::vector<std::vector<std::size_t>> dihedral4_table() {
  // elements r^i s^j encoded as i + 4j with s r = r^{-1} s
  auto idx = [](std::size_t i, std::size_t j) { return i + 4 * j; };
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          std::size_t rot = (j == 0) ? (i + k) % 4 : (i + 4 - k) % 4;
          t[idx(i, j)][idx(k, l)] = idx(rot, (j + l) % 2);
        }
  return t;
}

std::vector<std::vector<std::size_t>> quaternion_table() {
  // 0:1  1:-1  2:i  3:-i  4:j  5:-j  6:k  7:-k
  auto enc = [](int sign, std::size_t axis) {
    return 2 * axis + (sign < 0 ? 1 : 0);  // axis 0 = 1, 1 = i, 2 = j, 3 = k
  };
  // unit table: axis x axis -> (sign, axis)
  auto unit_mul = [](std::size_t a, std::size_t b, int& sign, std::size_t& axis) {
    static const int sgn[4][4] = {{1, 1, 1, 1},     // 1 * x
                                  {1, -1, 1, -1},   // i*1, i*i=-1, i*j=k, i*k=-j
                                  {1, -1, -1, 1},   // j*1, j*i=-k, j*j=-1, j*k=i
                                  {1, 1, -1, -1}};  // k*1, k*i=j, k*j=-i, k*k=-1
    static const std::size_t ax[4][4] = {{0, 1, 2, 3},   // 1*x = x
                                         {1, 0, 3, 2},   // i*i=1-axis, i*j=k, i*k=j-axis
                                         {2, 3, 0, 1},   // j*i=k-axis, j*j=1, j*k=i
                                         {3, 2, 1, 0}};  // k*i=j, k*j=i, k*k=1
    sign = sgn[a][b];
    axis = ax[a][b];
  };
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      int sa = (a % 2 == 0) ? 1 : -1, sb = (b % 2 == 0) ? 1 : -1;
      int sp;
      std::size_t axp;
      unit_mul(a / 2, b / 2, sp, axp);
      t[a][b] = enc(sa * sb * sp, axp);
    }
  return t;
}

}  // namespace soclelab
