#pragma once

#include <optional>
#include <vector>

#include "orelt/presentation.hpp"
#include "orelt/quotients.hpp"
#include "orelt/verdict.hpp"
#include "orelt/whitehead.hpp"

namespace orelt {

enum class EndsClass { Zero, One, Two, Infinite };

const char* endsName(EndsClass e);

// G = core * F(freeRank), where the core relator involves every core
// generator. coreGenerators[i] is the original index of core generator i+1.
struct FreeFactorization {
  OneRelatorPresentation core;
  int freeRank = 0;
  std::vector<int> coreGenerators;
  MinimalForm minimal;
};

// Replaces the relator root by its Whitehead-minimal form and splits off
// the generators missing from its support as a free factor.
FreeFactorization decomposeFreeFactors(const OneRelatorPresentation& p,
                                       int rankCap = kDefaultWhiteheadRankCap);

struct EndsReport {
  EndsClass endsG = EndsClass::One;
  EndsClass endsGhat = EndsClass::One;
  bool lemmaConsistent = false;
  int supportSize = 0;
  bool rootPrimitive = false;
};

// Number of ends of G = <X; R^n> and of the torsion-free quotient
// Ghat = <X; R>, for torsion presentations (m >= 2, n >= 2), together with
// the biconditional "G infinitely ended iff Ghat infinitely ended or
// infinite cyclic" evaluated from the two independent computations.
EndsReport classifyEnds(const OneRelatorPresentation& p,
                        int rankCap = kDefaultWhiteheadRankCap);

struct OrderVerdict {
  Status status = Status::Unknown;
  int order = 0;                      // set when ProvenTrue
  OrderLowerBoundVerdict lowerBound;  // certificates for w^e != 1, e < order
  int boundSearched = 0;
};

// Least d <= bound with w^d = 1, certified from both sides: the Dehn
// solver establishes w^d = 1 and finite quotients / abelianisation
// establish w^e != 1 for 0 < e < d.
OrderVerdict torsionOrder(const OneRelatorPresentation& p, const Word& w, int bound,
                          int maxQuotientDegree = kDefaultQuotientDegreeCap);

// m = 2 only: G is Fuchsian iff [a, b] is a cyclic shift of R or R^{-1}.
bool isFuchsian2Gen(const OneRelatorPresentation& p);

}  // namespace orelt
