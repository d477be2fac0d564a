#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bpenta {

enum class ErrorKind {
  LengthMismatch,
  SizeTooSmall,
  DivisionByZero,
  BothZero,
  PoleAtZero,
  ZeroPivot,
  IdenticallySingular,
  Singular,
  Parse,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SizeTooSmall: return "SizeTooSmall";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::ZeroPivot: return "ZeroPivot";
    case ErrorKind::IdenticallySingular: return "IdenticallySingular";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Single exception type for the library. `index()` carries the 1-based
/// pivot number for ZeroPivot and is 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t index = 0)
      : std::runtime_error(message), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::size_t index_;
};

}  // namespace bpenta
