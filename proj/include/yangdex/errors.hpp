#pragma once

#include <stdexcept>
#include <string>

namespace yangdex {

/* Every failure the library can diagnose.  Codes double as machine-readable
 * identifiers in CLI reports, so the names are stable API. */
enum class ErrorCode {
  EmptyInput,
  MalformedFacet,
  NotOrder2,
  NotSimplicial,
  NotFree,
  NotPseudomanifoldLike,
  NonOrientable,
  NotEquivariant,
  DimensionMismatch,
  OrderMismatch,
  NotCocycle,
  NotAntipodal,
  WrongAlphabet,
  HasComplementaryEdge,
  NotACover,
  BadPairing,
  NotClosed,
  NotClosedPseudomanifold,
  IllDefined,
  NotTransversal,
  NotFreeOnX,
  XNotFullSubcomplex,
  NoWitness,
  BadInput,
  InternalInconsistency,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

/* Throws InternalInconsistency; for conditions the library itself guarantees. */
void require_internal(bool ok, const std::string& message);

}  // namespace yangdex
