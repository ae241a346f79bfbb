#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sadic {

enum class ErrorCode {
  AlphabetMismatch,
  InvalidMorphism,
  InvalidSequence,
  UnknownSymbol,
  IllegalWindow,
  BadCuts,
  NoSeed,
  NoReturn,
  NotPrimitive,
  NotTorsionFree,
  CertificateNotFound,
  NotClosed,
  NoOccurrence,
  WindowNotFound,
  IncoherentResidues,
  BudgetExceeded,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace sadic
