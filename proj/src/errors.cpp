#include "yangdex/errors.hpp"

namespace yangdex {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MalformedFacet: return "MalformedFacet";
    case ErrorCode::NotOrder2: return "NotOrder2";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::NotPseudomanifoldLike: return "NotPseudomanifoldLike";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotCocycle: return "NotCocycle";
    case ErrorCode::NotAntipodal: return "NotAntipodal";
    case ErrorCode::WrongAlphabet: return "WrongAlphabet";
    case ErrorCode::HasComplementaryEdge: return "HasComplementaryEdge";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::BadPairing: return "BadPairing";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotClosedPseudomanifold: return "NotClosedPseudomanifold";
    case ErrorCode::IllDefined: return "IllDefined";
    case ErrorCode::NotTransversal: return "NotTransversal";
    case ErrorCode::NotFreeOnX: return "NotFreeOnX";
    case ErrorCode::XNotFullSubcomplex: return "XNotFullSubcomplex";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

void require_internal(bool ok, const std::string& message) {
  if (!ok) fail(ErrorCode::InternalInconsistency, message);
}

}  // namespace yangdex
