#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "orelt/presentation.hpp"
#include "orelt/verdict.hpp"
#include "orelt/words.hpp"

namespace orelt {

inline constexpr int kDefaultQuotientDegreeCap = 6;

// A permutation of {0..k-1}, as the image table p[i].
using Perm = std::vector<int>;

Perm identityPerm(int degree);
// Left-to-right composition: (a then b)[i] = b[a[i]].
Perm composePerms(const Perm& a, const Perm& b);
int permOrder(const Perm& p);
bool isIdentity(const Perm& p);

// A homomorphism from the presented group into S_degree: one permutation
// per generator, every relator mapping to the identity.
struct FiniteQuotientHom {
  int degree = 0;
  std::vector<Perm> images;

  Perm imageOf(const Word& w) const;
  bool satisfies(const Presentation& p) const;
};

// Streams every relator-satisfying hom in deterministic lexicographic
// order of image tuples. Return false from the callback to stop early.
void forEachHom(const Presentation& p, int degree,
                const std::function<bool(const FiniteQuotientHom&)>& visit);

// Materialised enumeration; throws when degree exceeds the cap.
std::vector<FiniteQuotientHom> enumerateHoms(const Presentation& p, int degree,
                                             int degreeCap = kDefaultQuotientDegreeCap);

struct NontrivialityVerdict {
  Status status = Status::Unknown;
  std::optional<FiniteQuotientHom> witness;  // maps w away from the identity
  int maxDegreeSearched = 0;
};

// ProvenTrue when some hom of degree <= maxDegree maps w to a non-identity
// permutation; never ProvenFalse.
NontrivialityVerdict certifyNontrivial(const Presentation& p, const Word& w,
                                       int maxDegree,
                                       int degreeCap = kDefaultQuotientDegreeCap);

struct OrderExclusion {
  int excludedPower = 0;  // the e with w^e proven nontrivial
  bool byAbelianization = false;
  std::optional<FiniteQuotientHom> hom;
};

struct OrderLowerBoundVerdict {
  Status status = Status::Unknown;
  int bound = 0;  // the d that was requested
  std::vector<OrderExclusion> exclusions;
  int maxDegreeSearched = 0;
};

// Certifies that w has order at least d: for every 0 < e < d, a witness
// (abelianisation or finite quotient) that w^e != 1.
OrderLowerBoundVerdict certifyOrderLowerBound(const Presentation& p, const Word& w,
                                              int d, int maxDegree,
                                              int degreeCap = kDefaultQuotientDegreeCap);

}  // namespace orelt
