#ifndef SOCLELAB_POLYMODEL_HPP
#define SOCLELAB_POLYMODEL_HPP

#include <optional>

#include "soclelab/fredholm.hpp"
#include "soclelab/length.hpp"
#include "soclelab/poly.hpp"

namespace soclelab {

/// The polynomial ring F[x] over a prime field as a Fredholm model. Its
/// socle is zero (every nonzero ideal (g) strictly contains (g x)), so the
/// quotient map is the identity and only the units are Fredholm — while
/// every nonzero f has finite xi. This is the commutative witness that
/// weak-Fredholm is strictly weaker than Fredholm.
///
/// Elements are plain polynomials; every quantity below is a function of
/// the factorization, so no ideal plumbing is carried around.

/// len(F[x]/(f)): the number of irreducible factors counted with
/// multiplicity (a composition series refines the factorization);
/// Infinite for f = 0.
LengthValue p_xi(const Poly& f);

/// Annihilator lengths vanish in a domain: 0 for f != 0, Infinite for
/// f = 0 (the annihilator of 0 is everything).
LengthValue p_rho(const Poly& f);

/// xi - rho: the factor count itself; absent only at f = 0.
std::optional<long long> p_zeta(const Poly& f);

/// Fredholm <=> [f] invertible in F[x]/soc = F[x] <=> f a nonzero constant.
bool p_is_fredholm(const Poly& f);

FredholmReport p_report(const Poly& f);

/// Checks n | zeta(s^n) + zeta(s^n) by explicit factorization; s != 0 and
/// n >= 1 required.
bool p_verify_root_divisibility(const Poly& s, std::size_t n);

}  // namespace soclelab

#endif
