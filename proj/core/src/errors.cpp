#include "catsieve/errors.hpp"

namespace catsieve {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::MissingComposite: return "MissingComposite";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::IdentityLawViolation: return "IdentityLawViolation";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownMorphism: return "UnknownMorphism";
    case ErrorKind::NotFunctor: return "NotFunctor";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::AmbientTooLarge: return "AmbientTooLarge";
    case ErrorKind::CodomainMismatch: return "CodomainMismatch";
    case ErrorKind::NotParallel: return "NotParallel";
    case ErrorKind::ApexMismatch: return "ApexMismatch";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::UnboundedChains: return "UnboundedChains";
    case ErrorKind::NotSubobject: return "NotSubobject";
    case ErrorKind::RangeExceedsValidity: return "RangeExceedsValidity";
    case ErrorKind::BoundaryCompositionNonzero: return "BoundaryCompositionNonzero";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void Budget::exhausted() const {
  throw Error(ErrorKind::AmbientTooLarge,
              what_ + " exceeded bound " + std::to_string(limit_));
}

}  // namespace catsieve
