#include "wavepart/errors.hpp"

namespace wavepart {

const char* to_string(GroupAxiomError::Axiom axiom) {
  switch (axiom) {
    case GroupAxiomError::Axiom::kNotSquare:
      return "not-square";
    case GroupAxiomError::Axiom::kEntryOutOfRange:
      return "entry-out-of-range";
    case GroupAxiomError::Axiom::kNotLatinSquare:
      return "not-latin-square";
    case GroupAxiomError::Axiom::kNoIdentity:
      return "no-identity";
    case GroupAxiomError::Axiom::kNotAssociative:
      return "not-associative";
  }
  return "unknown";
}

}  // namespace wavepart
