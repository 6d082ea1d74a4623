#ifndef SOCLELAB_ERROR_HPP
#define SOCLELAB_ERROR_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace soclelab {

enum class Errc {
  DimensionMismatch,
  AmbientMismatch,
  FieldMismatch,
  AlgebraMismatch,
  SideMismatch,
  DivisionByZero,
  ZeroPolynomial,
  UnsupportedField,
  AssociativityViolation,
  UnitViolation,
  InvolutionViolation,
  NotAGroup,
  NotTwoSidedIdeal,
  NotSemiprime,
  CharacteristicTooSmall,
  MissingInvolution,
  NotFredholm,
  FullIdeal,
  NotSemisimpleQuotient,
  ZeroElement,
  ChopInconclusive,
  InvalidSpec,
  InternalCheckFailed,
};

const char* errc_name(Errc c);

/// Error thrown by validation and precondition checks. `witness()` carries up
/// to three indices identifying the offending basis triple, characteristic,
/// or similar; unused slots are -1.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg,
        std::array<long, 3> witness = {-1, -1, -1})
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        witness_(witness) {}

  Errc code() const { return code_; }
  const std::array<long, 3>& witness() const { return witness_; }

 private:
  Errc code_;
  std::array<long, 3> witness_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg,
                              std::array<long, 3> witness = {-1, -1, -1}) {
  throw Error(code, msg, witness);
}

}  // namespace soclelab

#endif
