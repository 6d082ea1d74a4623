#include "soclelab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "soclelab/error.hpp"
#include "soclelab/matrix.hpp"

namespace soclelab {

Poly::Poly(FieldCtx f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const Scalar& s : c_) {
    if (s.field() != field_) fail(Errc::FieldMismatch, "polynomial coefficient field mismatch");
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(FieldCtx f, const Scalar& c) {
  Poly p(f);
  p.c_ = {c};
  p.trim();
  return p;
}

Poly Poly::x(FieldCtx f) { return monomial(f, 1, Scalar::one(f)); }

Poly Poly::monomial(FieldCtx f, std::size_t deg, const Scalar& c) {
  Poly p(f);
  if (c.is_zero()) return p;
  p.c_.assign(deg + 1, Scalar::zero(f));
  p.c_[deg] = c;
  return p;
}

Scalar Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Scalar::zero(field_);
}

Scalar Poly::leading() const {
  if (is_zero()) fail(Errc::DivisionByZero, "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  if (field_ != o.field_) fail(Errc::FieldMismatch, "polynomial field mismatch in +");
  Poly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r(field_);
  r.c_.reserve(c_.size());
  for (const Scalar& s : c_) r.c_.push_back(-s);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(field_);
  if (c.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const Scalar& s : c_) r.c_.push_back(s * c);
  r.trim();
  return r;
}

Poly Poly::monic() const { return scaled(leading().inverse()); }

Poly Poly::operator*(const Poly& o) const {
  if (field_ != o.field_) fail(Errc::FieldMismatch, "polynomial field mismatch in *");
  Poly r(field_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (field_ != d.field_) fail(Errc::FieldMismatch, "polynomial field mismatch in divmod");
  if (d.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  Poly q(field_);
  Poly r = *this;
  const Scalar lead_inv = d.leading().inverse();
  const int dd = d.degree();
  if (r.degree() >= dd) q.c_.assign(static_cast<std::size_t>(r.degree() - dd) + 1, Scalar::zero(field_));
  while (!r.is_zero() && r.degree() >= dd) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
    const Scalar coef = r.leading() * lead_inv;
    q.c_[shift] = coef;
    // r -= coef * x^shift * d, done in place
    for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= coef * d.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly Poly::derivative() const {
  Poly r(field_);
  if (c_.size() <= 1) return r;
  r.c_.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r.c_.push_back(c_[i] * Scalar::of(field_, static_cast<long long>(i)));
  }
  r.trim();
  return r;
}

Poly Poly::pow(std::size_t e) const {
  Poly acc = Poly::constant(field_, Scalar::one(field_));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

int Poly::compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  // high-degree coefficients first so "x^2+1 < x^2+x"
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    int c = Scalar::compare(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

// ---- parsing ----------------------------------------------------------

namespace {

// Grammar: poly := term (('+'|'-') term)* ; term := coeff? 'x' ('^' uint)? | coeff
// coeff := uint ('/' uint)?  — signs come from the separators.
struct PolyParser {
  FieldCtx f;
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void bad(const std::string& why) {
    fail(Errc::InvalidSpec, "bad polynomial '" + std::string(s) + "': " + why,
         {static_cast<long>(pos), 0, 0});
  }

  std::string read_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) bad("expected a number");
    return std::string(s.substr(start, pos - start));
  }

  Scalar read_coeff() {
    std::string num = read_number();
    if (eat('/')) num += "/" + read_number();
    return Scalar::parse(f, num);
  }

  // A single term, sign already applied by the caller.
  Poly read_term() {
    skip_ws();
    if (pos >= s.size()) bad("expected a term");
    Scalar c = Scalar::one(f);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      c = read_coeff();
      saw_coeff = true;
    }
    skip_ws();
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
      ++pos;
      std::size_t deg = 1;
      if (eat('^')) deg = std::stoul(read_number());
      return Poly::monomial(f, deg, c);
    }
    if (!saw_coeff) bad("expected coefficient or 'x'");
    return Poly::constant(f, c);
  }

  Poly run() {
    skip_ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    Poly acc = read_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) {
        acc = acc + read_term();
      } else if (eat('-')) {
        acc = acc - read_term();
      } else {
        bad("expected '+' or '-'");
      }
    }
    return acc;
  }
};

}  // namespace

Poly Poly::parse(FieldCtx f, std::string_view text) {
  PolyParser p{f, text};
  return p.run();
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (i == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs;
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// ---- gcd and factorization --------------------------------------------

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  return u.monic();
}

namespace {

// Substitutes x -> x^(1/p) for a polynomial whose nonzero exponents are all
// multiples of p. Over GF(p) the coefficients are already p-th powers
// (Frobenius is the identity on the prime field), so this IS the p-th root.
Poly pth_root(const Poly& f) {
  const FieldCtx field = f.field();
  const std::size_t p = field.characteristic();
  std::vector<Scalar> out;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); i += p) out.push_back(c[i]);
  return Poly(field, std::move(out));
}

// Squarefree decomposition over GF(p) (Yun's algorithm adapted to positive
// characteristic): returns (g_i, i) with f monic = prod g_i^i and each g_i
// squarefree, handling the f' == 0 case by p-th-root recursion.
void squarefree_decompose(const Poly& f, std::size_t mult_scale,
                          std::map<std::size_t, Poly>& out) {
  const FieldCtx field = f.field();
  const std::size_t p = field.characteristic();
  if (f.degree() <= 0) return;

  Poly d = f.derivative();
  if (d.is_zero()) {
    // f is a polynomial in x^p; recurse on its p-th root with scaled multiplicity.
    squarefree_decompose(pth_root(f), mult_scale * p, out);
    return;
  }

  Poly c = gcd(f, d);
  Poly w = f / c;  // product of squarefree parts with multiplicity not divisible by p
  std::size_t i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) {
      auto [it, fresh] = out.try_emplace(i * mult_scale, fac);
      if (!fresh) it->second = it->second * fac;
    }
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) {
    // leftover factors whose multiplicity is divisible by p
    squarefree_decompose(pth_root(c), mult_scale * p, out);
  }
}

// Berlekamp splitting of a monic squarefree polynomial over GF(p).
// Deterministic: uses the Frobenius kernel basis and scans all c in GF(p)
// for gcd(u, v - c) splits. Fine for the small p this engine targets.
void berlekamp_split(const Poly& f, std::vector<Poly>& out) {
  const FieldCtx field = f.field();
  const std::size_t p = field.characteristic();
  const int n = f.degree();
  if (n <= 1) {
    if (n == 1) out.push_back(f);
    return;
  }

  // Q[i] = coefficients of x^(i*p) mod f; Berlekamp subalgebra = ker(Q - I).
  const std::size_t un = static_cast<std::size_t>(n);
  Mat q(field, un, un);
  Poly xp = Poly::x(field).pow(p) % f;
  Poly cur = Poly::constant(field, Scalar::one(field));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) q.at(i, j) = cur.coeff(j);
    cur = (cur * xp) % f;
  }
  for (std::size_t i = 0; i < un; ++i) q.at(i, i) -= Scalar::one(field);
  Mat basis = null_space(q.transpose());  // rows: v with v(x)^p == v(x) mod f

  if (basis.rows() <= 1) {
    out.push_back(f);  // kernel is just the constants: f is irreducible
    return;
  }

  // Work queue of factors still to be split; each non-constant kernel element
  // v yields gcd(u, v - c) splits until everything is irreducible.
  std::vector<Poly> work = {f};
  const std::size_t target = basis.rows();  // number of irreducible factors
  for (std::size_t b = 0; b < basis.rows() && work.size() < target; ++b) {
    Poly v(field, basis.row(b));
    if (v.degree() <= 0) continue;
    std::vector<Poly> next;
    for (const Poly& u : work) {
      if (u.degree() == 1) {
        next.push_back(u);
        continue;
      }
      std::vector<Poly> pieces;
      Poly rest = u;
      for (std::uint64_t cval = 0; cval < p && rest.degree() > 0; ++cval) {
        Poly shifted = v - Poly::constant(field, Scalar::of_residue(field, cval));
        Poly g = gcd(rest, shifted);
        if (g.degree() > 0 && g.degree() < rest.degree()) {
          pieces.push_back(g);
          rest = rest / g;
        }
      }
      if (rest.degree() > 0) pieces.push_back(rest.monic());
      next.insert(next.end(), pieces.begin(), pieces.end());
    }
    work = std::move(next);
  }
  out.insert(out.end(), work.begin(), work.end());
}

}  // namespace

std::vector<PolyFactor> poly_factor(const Poly& f) {
  const FieldCtx field = f.field();
  if (field.is_rationals()) {
    fail(Errc::UnsupportedField, "polynomial factorization requires a prime field");
  }
  if (f.is_zero()) fail(Errc::DivisionByZero, "cannot factor the zero polynomial");

  std::vector<PolyFactor> result;
  if (f.degree() == 0) return result;  // units have no factors

  std::map<std::size_t, Poly> squarefree;
  squarefree_decompose(f.monic(), 1, squarefree);

  for (const auto& [mult, part] : squarefree) {
    std::vector<Poly> irred;
    berlekamp_split(part, irred);
    for (Poly& g : irred) result.push_back({g.monic(), mult});
  }

  std::sort(result.begin(), result.end(), [](const PolyFactor& a, const PolyFactor& b) {
    return Poly::compare(a.factor, b.factor) < 0;
  });
  // merge duplicates (can arise when distinct squarefree layers share a factor — they
  // cannot by construction, but keep the output canonical regardless)
  std::vector<PolyFactor> merged;
  for (const PolyFactor& pf : result) {
    if (!merged.empty() && merged.back().factor == pf.factor) {
      merged.back().multiplicity += pf.multiplicity;
    } else {
      merged.push_back(pf);
    }
  }

  // internal consistency: product of factor^multiplicity must reproduce monic(f)
  Poly check = Poly::constant(field, Scalar::one(field));
  for (const PolyFactor& pf : merged) check = check * pf.factor.pow(pf.multiplicity);
  if (!(check == f.monic())) {
    fail(Errc::InternalCheckFailed, "factorization product mismatch for " + f.to_string());
  }
  return merged;
}

std::size_t factor_count(const Poly& f) {
  std::size_t total = 0;
  for (const PolyFactor& pf : poly_factor(f)) total += pf.multiplicity;
  return total;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  auto fs = poly_factor(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace soclelab
