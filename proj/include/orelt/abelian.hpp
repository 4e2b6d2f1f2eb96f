#pragma once

#include <cstdint>
#include <vector>

#include "orelt/presentation.hpp"
#include "orelt/words.hpp"

namespace orelt {

// Exponent-sum vector of w over generators 1..rank.
std::vector<std::int64_t> exponentVector(const Word& w, int rank);

// Whether v lies in the integer lattice spanned by the given rows.
bool inRowLattice(std::vector<std::vector<std::int64_t>> rows,
                  std::vector<std::int64_t> v);

struct AbelianInvariants {
  // Nontrivial torsion divisors d1 | d2 | ..., each >= 2.
  std::vector<std::int64_t> torsion;
  int freeRank = 0;

  bool operator==(const AbelianInvariants&) const = default;
};

// Elementary divisors of the abelianisation of P.
AbelianInvariants abelianInvariants(const Presentation& p);

// True when the image of w in the abelianisation of P is nonzero; a cheap
// certificate that w is nontrivial in the group itself.
bool nontrivialInAbelianization(const Presentation& p, const Word& w);

}  // namespace orelt
