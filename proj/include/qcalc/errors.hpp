#pragma once

#include <stdexcept>
#include <string>

namespace qcalc {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used in CLI error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define QCALC_DEFINE_ERROR(Name, tag)                                      \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& message) : Error(tag, message) {}     \
  };

QCALC_DEFINE_ERROR(IndeterminateMismatch, "IndeterminateMismatch")
QCALC_DEFINE_ERROR(ZeroPolynomial, "ZeroPolynomial")
QCALC_DEFINE_ERROR(Inconsistent, "Inconsistent")
QCALC_DEFINE_ERROR(Underdetermined, "Underdetermined")
QCALC_DEFINE_ERROR(ParametricNotSupported, "ParametricNotSupported")
QCALC_DEFINE_ERROR(InvalidFlag, "InvalidFlag")
QCALC_DEFINE_ERROR(InvalidAlgebra, "InvalidAlgebra")
QCALC_DEFINE_ERROR(InvalidFrame, "InvalidFrame")
QCALC_DEFINE_ERROR(NotQuaternionic, "NotQuaternionic")
QCALC_DEFINE_ERROR(NotIntegrable, "NotIntegrable")
QCALC_DEFINE_ERROR(InconsistentCurvature, "InconsistentCurvature")
QCALC_DEFINE_ERROR(InconsistentTorsion, "InconsistentTorsion")
QCALC_DEFINE_ERROR(NotALieAlgebra, "NotALieAlgebra")
QCALC_DEFINE_ERROR(InternalError, "InternalError")
QCALC_DEFINE_ERROR(LookupError, "LookupError")
QCALC_DEFINE_ERROR(InputError, "InputError")

#undef QCALC_DEFINE_ERROR

/// Syntax or semantic error in an `.alg` document, with 1-based position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("ParseError", std::to_string(line) + ":" + std::to_string(column) +
                                ": " + message),
        line_(line),
        column_(column),
        detail_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

}  // namespace qcalc
