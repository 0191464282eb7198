#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace catsieve {

enum class ErrorKind {
  Malformed,
  MissingComposite,
  NonAssociative,
  IdentityLawViolation,
  UnknownObject,
  UnknownMorphism,
  NotFunctor,
  NotNatural,
  AmbientTooLarge,
  CodomainMismatch,
  NotParallel,
  ApexMismatch,
  Mismatch,
  HypothesisFails,
  NotSimplicial,
  UnboundedChains,
  NotSubobject,
  RangeExceedsValidity,
  BoundaryCompositionNonzero,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Enumeration guards. Every exponential search consumes from one of these
// budgets and throws AmbientTooLarge instead of truncating.
struct Guards {
  std::size_t cocone_candidates = 1'000'000;
  std::size_t arrows_into_object = 16;
  std::size_t gensieve_objects = 20'000;
  std::size_t simplices_per_level = 2'000'000;
};

// Counts work against a bound; throws AmbientTooLarge when exhausted.
class Budget {
 public:
  Budget(std::size_t limit, std::string what) : limit_(limit), what_(std::move(what)) {}

  void spend(std::size_t n = 1) {
    used_ += n;
    if (used_ > limit_) exhausted();
  }
  std::size_t used() const { return used_; }
  std::size_t limit() const { return limit_; }

 private:
  [[noreturn]] void exhausted() const;

  std::size_t limit_;
  std::size_t used_ = 0;
  std::string what_;
};

}  // namespace catsieve
