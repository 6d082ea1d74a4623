#ifndef SOCLELAB_FIELD_HPP
#define SOCLELAB_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "soclelab/error.hpp"

namespace soclelab {

/// Base field of a computation: the rationals or a prime field GF(p).
/// Every Scalar carries its FieldCtx; mixing fields throws.
class FieldCtx {
 public:
  FieldCtx() = default;  // rationals
  static FieldCtx rationals() { return FieldCtx{}; }
  static FieldCtx gf(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

 private:
  explicit FieldCtx(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;  // 0 encodes the rationals
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element. Rationals are reduced fractions (GMP canonical form),
/// prime-field values are least nonnegative residues, so equality is a plain
/// data comparison after construction.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  explicit Scalar(FieldCtx f) : field_(f) {}

  static Scalar zero(FieldCtx f) { return Scalar(f); }
  static Scalar one(FieldCtx f);
  static Scalar of(FieldCtx f, long long n);
  static Scalar of(FieldCtx f, long long num, long long den);
  static Scalar of_rational(mpq_class q);
  static Scalar of_residue(FieldCtx f, std::uint64_t r);

  /// Parses "5", "-3", or "a/b". Over GF(p) the slash means division mod p.
  static Scalar parse(FieldCtx f, std::string_view text);

  FieldCtx field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Prime-field residue in [0, p). Only valid over GF(p).
  std::uint64_t residue() const { return res_; }
  const mpq_class& rational() const { return rat_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  Scalar inverse() const;  // throws DivisionByZero on zero
  Scalar pow(long long e) const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for canonical tie-breaking, not field structure.
  static int compare(const Scalar& a, const Scalar& b);

 private:
  void check_same(const Scalar& o) const;

  FieldCtx field_;
  std::uint64_t res_ = 0;
  mpq_class rat_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace soclelab

#endif
