#include "twistcoh/error.hpp"

namespace twistcoh {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInvariant: return "InvalidInvariant";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::OrderCap: return "OrderCap";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotPointwiseTrivial: return "NotPointwiseTrivial";
    case ErrorCode::TransgressionNotBijective: return "TransgressionNotBijective";
    case ErrorCode::NoClassFound: return "NoClassFound";
    case ErrorCode::DeltaNotSubgroup: return "DeltaNotSubgroup";
    case ErrorCode::InvalidExtension: return "InvalidExtension";
    case ErrorCode::ProfileInconsistent: return "ProfileInconsistent";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::MismatchAt: return "MismatchAt";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnresolvedRef: return "UnresolvedRef";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace twistcoh
