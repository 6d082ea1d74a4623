#include "soclelab/polymodel.hpp"

#include "soclelab/error.hpp"

namespace soclelab {

LengthValue p_xi(const Poly& f) {
  if (f.is_zero()) return LengthValue::infinite();
  return LengthValue::finite(factor_count(f));
}

LengthValue p_rho(const Poly& f) {
  return f.is_zero() ? LengthValue::infinite() : LengthValue::finite(0);
}

std::optional<long long> p_zeta(const Poly& f) {
  if (f.is_zero()) return std::nullopt;
  return static_cast<long long>(factor_count(f));
}

bool p_is_fredholm(const Poly& f) { return !f.is_zero() && f.degree() == 0; }

FredholmReport p_report(const Poly& f) {
  FredholmReport r;
  r.is_fredholm = r.is_semi_plus = r.is_semi_minus = p_is_fredholm(f);
  r.xi_l = r.xi_r = p_xi(f);
  r.rho_l = r.rho_r = p_rho(f);
  r.is_weak_plus = r.is_weak_minus = r.xi_l.is_finite();
  r.zeta_l = r.zeta_r = p_zeta(f);
  return r;
}

bool p_verify_root_divisibility(const Poly& s, std::size_t n) {
  if (s.is_zero()) fail(Errc::ZeroPolynomial, "root divisibility needs a nonzero base");
  if (n == 0) fail(Errc::InvalidSpec, "root divisibility needs n >= 1");
  auto z = p_zeta(s.pow(n));
  return (2 * static_cast<unsigned long long>(*z)) % n == 0;
}

}  // namespace soclelab
