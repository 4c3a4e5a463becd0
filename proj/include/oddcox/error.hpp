#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oddcox {

enum class ErrorKind {
  // coxeter-core
  NotSymmetric,
  DiagonalNotOne,
  EvenOrSmallExponent,
  NotInTW,
  MalformedInvariant,
  NotStarForm,
  NotAdjacentPair,
  Parse,
  // word-engine
  InvalidLetter,
  OrbitBudgetExceeded,
  NotInvolution,
  NoDescentStep,
  NotInParabolic,
  // aut-kit
  BadThetaExponent,
  BlockViolatingPermutation,
  NotAutomorphism,
  IsInnerNoWitness,
  NoWitnessFound,
  NotSurjective,
  // unit-arithmetic
  EvenModulus,
  // ln-toolkit
  RankTooSmall,
  BadLetter,
  UnsupportedForm,
  NotAHomomorphism,
  ImageTooLarge,
  NonIntegerResult,
  NotBijectiveHom,
  GroupTooLarge,
  // oracle
  BallBudgetExceeded,
  // violated internal consistency check
  Internal,
};

/// Stable, machine-parsable tag for an error kind (e.g. "not-symmetric").
/// Both budget kinds map to "budget".
std::string_view tag(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace oddcox
