#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace epoly {

enum class ErrorCode {
  OddExponent,
  NonzeroConstantTerm,
  ConstantTermNotOne,
  DivisionByZero,
  NotDivisible,
  InvalidPartition,
  WeightMismatch,
  EmptyPartition,
  InvalidSurface,
  EvenK,
  KOutOfRange,
  NotPolynomial,
  UnsupportedRank,
  NotPrime,
  SingularMatrix,
  KernelMissing,
  NoPrimitiveRoot,
  GroupTooLarge,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddExponent: return "OddExponent";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::EvenK: return "EvenK";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::KernelMissing: return "KernelMissing";
    case ErrorCode::NoPrimitiveRoot: return "NoPrimitiveRoot";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported through this type; the
/// code identifies the failed precondition, the message carries context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace epoly
