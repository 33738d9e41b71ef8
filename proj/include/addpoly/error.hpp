#pragma once

#include <stdexcept>
#include <string>

namespace addpoly {

enum class Errc {
  NotPrime,
  NotIrreducible,
  DegreeMismatch,
  DivisionByZero,
  ContextMismatch,
  ConstantInput,
  ConstantModulus,
  RootAtZero,
  NotAdditive,
  ZeroDivisor,
  ZeroInput,
  ExceptionalForm,
  NonSquare,
  DimensionMismatch,
  Unsupported,
  FormulaNotValid,
  OracleTooLarge,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace addpoly
