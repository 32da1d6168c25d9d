#include "cplab/error.hpp"

namespace cplab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotSoluble: return "NotSoluble";
    case ErrorCode::NotAPGroup: return "NotAPGroup";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotCoprimeToP: return "NotCoprimeToP";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NonUnique: return "NonUnique";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotElementaryAbelianLayer: return "NotElementaryAbelianLayer";
    case ErrorCode::UnknownSpec: return "UnknownSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cplab
