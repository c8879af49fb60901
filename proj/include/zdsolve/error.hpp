#pragma once

#include <stdexcept>
#include <string>

namespace zds {

enum class ErrorCode {
  NotInvertible,
  LengthMismatch,
  DimensionMismatch,
  ExponentOverflow,
  InvalidModulus,
  EmptyPairSet,
  ZeroIdealInput,
  BadPrime,
  PositiveDimension,
  StaircaseNotGeneric,
  UnluckyVector,
  CharacteristicTooSmall,
  Unverified,
  NotIsolating,
  NotSquarefree,
  ZeroPolynomial,
  UnluckyLearningPrime,
  TooManyBadPrimes,
  Parse,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  explicit Error(ErrorCode code) : std::runtime_error(to_string(code)), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace zds
