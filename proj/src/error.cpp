#include "oddcox/error.hpp"

namespace oddcox {

std::string_view tag(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSymmetric: return "not-symmetric";
    case ErrorKind::DiagonalNotOne: return "diagonal-not-one";
    case ErrorKind::EvenOrSmallExponent: return "even-or-small-exponent";
    case ErrorKind::NotInTW: return "not-in-tw";
    case ErrorKind::MalformedInvariant: return "malformed-invariant";
    case ErrorKind::NotStarForm: return "not-star-form";
    case ErrorKind::NotAdjacentPair: return "not-adjacent-pair";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InvalidLetter: return "invalid-letter";
    case ErrorKind::OrbitBudgetExceeded: return "budget";
    case ErrorKind::NotInvolution: return "not-involution";
    case ErrorKind::NoDescentStep: return "no-descent-step";
    case ErrorKind::NotInParabolic: return "not-in-parabolic";
    case ErrorKind::BadThetaExponent: return "bad-theta-exponent";
    case ErrorKind::BlockViolatingPermutation: return "block-violating-permutation";
    case ErrorKind::NotAutomorphism: return "not-automorphism";
    case ErrorKind::IsInnerNoWitness: return "is-inner-no-witness";
    case ErrorKind::NoWitnessFound: return "no-witness-found";
    case ErrorKind::NotSurjective: return "not-surjective";
    case ErrorKind::EvenModulus: return "even-modulus";
    case ErrorKind::RankTooSmall: return "rank-too-small";
    case ErrorKind::BadLetter: return "bad-letter";
    case ErrorKind::UnsupportedForm: return "unsupported-form";
    case ErrorKind::NotAHomomorphism: return "not-a-homomorphism";
    case ErrorKind::ImageTooLarge: return "image-too-large";
    case ErrorKind::NonIntegerResult: return "non-integer-result";
    case ErrorKind::NotBijectiveHom: return "not-bijective-hom";
    case ErrorKind::GroupTooLarge: return "group-too-large";
    case ErrorKind::BallBudgetExceeded: return "budget";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace oddcox
