#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orelt/presentation.hpp"
#include "orelt/quotients.hpp"
#include "orelt/verdict.hpp"

namespace orelt {

struct SearchBounds {
  int maxWitnessLength = 4;  // |y| / conjugator length cap
  int maxPower = 3;          // |i|, |j| / conjugate-factor count cap
  int maxCosetPower = 6;     // <x>-membership exclusion cap
};

// Witness against malnormality of <x>: y with y^{-1} x^i y = x^j that is
// not identified with any power x^k, |k| <= cosetExclusionBound. The
// exclusion is bounded, so the bound travels with the witness.
struct MalnormalityWitness {
  Word y;
  int i = 0;
  int j = 0;
  int cosetExclusionBound = 0;
};

struct MalnormalityVerdict {
  Status status = Status::Unknown;
  std::optional<MalnormalityWitness> witness;
  SearchBounds bounds;
  long candidatesTried = 0;
};

// Bounded search for a conjugation relation y^{-1} x^i y = x^j with
// y outside <x> up to the coset bound; all relations checked by the Dehn
// solver. Throws std::domain_error when x is trivial in G.
MalnormalityVerdict malnormalWitnessSearch(const OneRelatorPresentation& p,
                                           const Word& x, const SearchBounds& bounds);

struct ConjugateFactor {
  Word conjugator;
  int sign = 1;  // +-1, for R^{+-1}
};

struct TMembershipVerdict {
  Status status = Status::Unknown;
  // ProvenFalse certificates: a quotient of Ghat separating w, or an
  // exponent-sum obstruction.
  std::optional<FiniteQuotientHom> quotientWitness;
  bool abelianObstruction = false;
  // ProvenTrue certificate: w = prod conjugator_k R^{sign_k} conjugator_k^{-1}
  // as an identity of the free group.
  std::vector<ConjugateFactor> productCertificate;
  SearchBounds bounds;
};

// Semi-decides membership of w in T = <<R>>, the kernel of G -> Ghat.
TMembershipVerdict tMembership(const OneRelatorPresentation& p, const Word& w,
                               const SearchBounds& bounds, int maxQuotientDegree = 4);

struct EndsHarnessReport {
  int rank = 0;
  int maxRootLength = 0;
  int exponent = 2;
  long rootsChecked = 0;
  long independentRootCount = 0;  // second enumeration, must match
  std::vector<std::string> violations;
  double seconds = 0.0;
};

// Exhaustively checks the ends biconditional over every non-proper-power
// cyclic root up to maxRootLength. Throws std::runtime_error when the
// requested bounds exceed the configured caps.
EndsHarnessReport endsLemmaHarness(int rank, int maxRootLength, int n,
                                   int maxRank = 3, int maxLength = 8);

std::string formatHarnessReport(const EndsHarnessReport& report);

}  // namespace orelt
