#include "zdsolve/error.hpp"

namespace zds {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInvertible: return "not invertible";
    case ErrorCode::LengthMismatch: return "length mismatch";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::ExponentOverflow: return "exponent overflow";
    case ErrorCode::InvalidModulus: return "characteristic not prime";
    case ErrorCode::EmptyPairSet: return "empty pair set";
    case ErrorCode::ZeroIdealInput: return "zero ideal input";
    case ErrorCode::BadPrime: return "bad prime";
    case ErrorCode::PositiveDimension: return "positive dimension";
    case ErrorCode::StaircaseNotGeneric: return "staircase not generic";
    case ErrorCode::UnluckyVector: return "unlucky vector";
    case ErrorCode::CharacteristicTooSmall: return "characteristic too small for squarefree";
    case ErrorCode::Unverified: return "unverified";
    case ErrorCode::NotIsolating: return "not isolating";
    case ErrorCode::NotSquarefree: return "input likely not squarefree";
    case ErrorCode::ZeroPolynomial: return "zero polynomial";
    case ErrorCode::UnluckyLearningPrime: return "unlucky p0, relearn";
    case ErrorCode::TooManyBadPrimes: return "too many bad primes";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

}  // namespace zds
