#pragma once

#include <stdexcept>
#include <string>

namespace ybx {

enum class ErrorCode {
  ShapeMismatch,
  NotBijective,
  YbeViolated,
  NotARack,
  UnknownName,
  RingMismatch,
  NotInvolutive,
  NotAField,
  NotAComplex,
  QuotientNotStable,
  VariantInadmissible,
  ZeroValue,
  DegreeMismatch,
  NonTrivialCoefficients,
  BadInput,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::YbeViolated: return "YbeViolated";
    case ErrorCode::NotARack: return "NotARack";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::QuotientNotStable: return "QuotientNotStable";
    case ErrorCode::VariantInadmissible: return "VariantInadmissible";
    case ErrorCode::ZeroValue: return "ZeroValue";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NonTrivialCoefficients: return "NonTrivialCoefficients";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ybx
