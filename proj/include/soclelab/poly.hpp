#ifndef SOCLELAB_POLY_HPP
#define SOCLELAB_POLY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "soclelab/field.hpp"

namespace soclelab {

/// Univariate polynomial with exact coefficients, stored low-degree first
/// with no trailing zeros (the zero polynomial has an empty list).
class Poly {
 public:
  explicit Poly(FieldCtx f) : field_(f) {}
  Poly(FieldCtx f, std::vector<Scalar> coeffs);

  static Poly zero(FieldCtx f) { return Poly(f); }
  static Poly constant(FieldCtx f, const Scalar& c);
  static Poly x(FieldCtx f);
  static Poly monomial(FieldCtx f, std::size_t deg, const Scalar& c);

  /// Parses "x^2+3x+1", "2x", "x^12+1", "-x+4".
  static Poly parse(FieldCtx f, std::string_view text);

  FieldCtx field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  Poly monic() const;  // throws on zero

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly derivative() const;
  Poly pow(std::size_t e) const;
  Scalar eval(const Scalar& x) const;

  std::string to_string() const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Lexicographic-by-(degree, coefficients) order for canonical sorting.
  static int compare(const Poly& a, const Poly& b);

 private:
  void trim();
  FieldCtx field_;
  std::vector<Scalar> c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic gcd

struct PolyFactor {
  Poly factor;  // monic irreducible
  std::size_t multiplicity;
};

/// Full factorization over GF(p): squarefree decomposition followed by
/// Berlekamp splitting of each squarefree part. Factors are monic,
/// irreducible, and sorted canonically. The product of factor^multiplicity
/// equals the monic part of f.
std::vector<PolyFactor> poly_factor(const Poly& f);

/// Number of irreducible factors counted with multiplicity (0 for units).
std::size_t factor_count(const Poly& f);

bool is_irreducible(const Poly& f);

}  // namespace soclelab

#endif
