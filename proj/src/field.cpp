#include "soclelab/field.hpp"

#include <charconv>

namespace soclelab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::SideMismatch: return "SideMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::AssociativityViolation: return "AssociativityViolation";
    case Errc::UnitViolation: return "UnitViolation";
    case Errc::InvolutionViolation: return "InvolutionViolation";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::NotTwoSidedIdeal: return "NotTwoSidedIdeal";
    case Errc::NotSemiprime: return "NotSemiprime";
    case Errc::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case Errc::MissingInvolution: return "MissingInvolution";
    case Errc::NotFredholm: return "NotFredholm";
    case Errc::FullIdeal: return "FullIdeal";
    case Errc::NotSemisimpleQuotient: return "NotSemisimpleQuotient";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::ChopInconclusive: return "ChopInconclusive";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "UnknownError";
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldCtx FieldCtx::gf(std::uint64_t p) {
  if (!is_prime_u64(p)) fail(Errc::InvalidSpec, "GF modulus " + std::to_string(p) + " is not prime");
  if (p >= (1ull << 32)) fail(Errc::UnsupportedField, "GF modulus must fit in 32 bits");
  return FieldCtx(p);
}

std::string FieldCtx::to_string() const {
  return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p), p prime
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) fail(Errc::DivisionByZero, "element not invertible mod p");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

Scalar Scalar::one(FieldCtx f) {
  Scalar s(f);
  if (f.is_rationals())
    s.rat_ = 1;
  else
    s.res_ = 1 % f.characteristic();
  return s;
}

Scalar Scalar::of(FieldCtx f, long long n) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.rat_ = mpq_class(static_cast<long>(n));
  } else {
    long long p = static_cast<long long>(f.characteristic());
    long long r = n % p;
    if (r < 0) r += p;
    s.res_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::of(FieldCtx f, long long num, long long den) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  return of(f, num) / of(f, den);
}

Scalar Scalar::of_rational(mpq_class q) {
  Scalar s(FieldCtx::rationals());
  q.canonicalize();
  s.rat_ = std::move(q);
  return s;
}

Scalar Scalar::of_residue(FieldCtx f, std::uint64_t r) {
  Scalar s(f);
  s.res_ = r % f.characteristic();
  return s;
}

Scalar Scalar::parse(FieldCtx f, std::string_view text) {
  auto parse_ll = [&](std::string_view t) -> long long {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
      fail(Errc::InvalidSpec, "bad scalar literal '" + std::string(text) + "'");
    return v;
  };
  if (text.empty()) fail(Errc::InvalidSpec, "empty scalar literal");
  if (f.is_rationals()) {
    try {
      mpq_class q(std::string(text), 10);
      q.canonicalize();
      return of_rational(q);
    } catch (const std::invalid_argument&) {
      fail(Errc::InvalidSpec, "bad scalar literal '" + std::string(text) + "'");
    }
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return of(f, parse_ll(text));
  return of(f, parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rationals()) return rat_ == 1;
  return res_ == 1 % field_.characteristic();
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) fail(Errc::FieldMismatch, "scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = -rat_;
  else if (res_ != 0)
    s.res_ = field_.characteristic() - res_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s(*this);
  s += o;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar s(*this);
  s -= o;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s(*this);
  s *= o;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rationals()) {
    rat_ += o.rat_;
  } else {
    res_ += o.res_;
    if (res_ >= field_.characteristic()) res_ -= field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rationals()) {
    rat_ -= o.rat_;
  } else {
    res_ += field_.characteristic() - o.res_;
    if (res_ >= field_.characteristic()) res_ -= field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rationals())
    rat_ *= o.rat_;
  else
    res_ = (res_ * o.res_) % field_.characteristic();
  return *this;
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = 1 / rat_;
  else
    s.res_ = mod_inverse(res_, field_.characteristic());
  return s;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) return rat_.get_str();
  return std::to_string(res_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rationals() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.field_.is_rationals()) return cmp(a.rat_, b.rat_);
  return a.res_ < b.res_ ? -1 : a.res_ > b.res_ ? 1 : 0;
}

}  // namespace soclelab
