#pragma once

#include <stdexcept>
#include <string>

namespace picard {

// Process exit codes used by the CLI. Library code throws typed exceptions;
// the CLI maps them through Error::exit_code().
enum class ErrorClass {
  Io = 1,
  Parse = 2,         // malformed input, non-squarefree d, zero ideal
  Unsupported = 3,   // non-decomposed prime 2, norms beyond the factoring bound
  Hypothesis = 4,    // neatness or weight hypothesis violated
  Internal = 5,      // invariant breach (non-integral class number / dimension)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& msg) : std::runtime_error(msg), cls_(cls) {}
  ErrorClass error_class() const { return cls_; }
  int exit_code() const { return static_cast<int>(cls_); }

 private:
  ErrorClass cls_;
};

struct NotSquarefree : Error {
  explicit NotSquarefree(const std::string& m) : Error(ErrorClass::Parse, m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(ErrorClass::Parse, m) {}
};
struct ZeroIdeal : Error {
  explicit ZeroIdeal(const std::string& m) : Error(ErrorClass::Parse, m) {}
};
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& m) : Error(ErrorClass::Parse, m) {}
};
struct Prime2NonDecomposed : Error {
  explicit Prime2NonDecomposed(const std::string& m) : Error(ErrorClass::Unsupported, m) {}
};
struct NormFactorizationFailure : Error {
  explicit NormFactorizationFailure(const std::string& m) : Error(ErrorClass::Unsupported, m) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& m) : Error(ErrorClass::Unsupported, m) {}
};
struct NotNeat : Error {
  explicit NotNeat(const std::string& m) : Error(ErrorClass::Hypothesis, m) {}
};
struct WeightTooSmall : Error {
  explicit WeightTooSmall(const std::string& m) : Error(ErrorClass::Hypothesis, m) {}
};
struct NonIntegralClassNumber : Error {
  explicit NonIntegralClassNumber(const std::string& m) : Error(ErrorClass::Internal, m) {}
};
struct NonIntegralDimension : Error {
  explicit NonIntegralDimension(const std::string& m) : Error(ErrorClass::Internal, m) {}
};
struct InternalError : Error {
  explicit InternalError(const std::string& m) : Error(ErrorClass::Internal, m) {}
};
struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorClass::Io, m) {}
};

}  // namespace picard
