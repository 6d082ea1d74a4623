#ifndef SOCLELAB_LENGTH_HPP
#define SOCLELAB_LENGTH_HPP

#include <cstddef>
#include <string>

#include "soclelab/error.hpp"

namespace soclelab {

/// Composition length: a nonnegative count or Infinite. Infinite only arises
/// from the infinite-dimensional models; everything finite-dimensional is
/// Finite(n).
class LengthValue {
 public:
  static LengthValue finite(std::size_t n) { return LengthValue(true, n); }
  static LengthValue infinite() { return LengthValue(false, 0); }

  bool is_finite() const { return finite_; }
  std::size_t value() const {
    if (!finite_) fail(Errc::InternalCheckFailed, "value() on infinite length");
    return n_;
  }

  LengthValue operator+(const LengthValue& o) const {
    if (!finite_ || !o.finite_) return infinite();
    return finite(n_ + o.n_);
  }

  std::string to_string() const { return finite_ ? std::to_string(n_) : "infinite"; }

  friend bool operator==(const LengthValue&, const LengthValue&) = default;

 private:
  LengthValue(bool f, std::size_t n) : finite_(f), n_(n) {}
  bool finite_;
  std::size_t n_;
};

}  // namespace soclelab

#endif
