#include "sadic/errors.hpp"

namespace sadic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::IllegalWindow: return "IllegalWindow";
    case ErrorCode::BadCuts: return "BadCuts";
    case ErrorCode::NoSeed: return "NoSeed";
    case ErrorCode::NoReturn: return "NoReturn";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotTorsionFree: return "NotTorsionFree";
    case ErrorCode::CertificateNotFound: return "CertificateNotFound";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NoOccurrence: return "NoOccurrence";
    case ErrorCode::WindowNotFound: return "WindowNotFound";
    case ErrorCode::IncoherentResidues: return "IncoherentResidues";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace sadic
