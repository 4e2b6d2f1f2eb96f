#pragma once

#include <set>
#include <string>
#include <vector>

#include "orelt/words.hpp"

namespace orelt {

// Default refusal threshold for the exponential type-II enumeration.
inline constexpr int kDefaultWhiteheadRankCap = 6;

// A Whitehead automorphism of F_m. Type I permutes and inverts the basis;
// type II is the (A, a) multiplier automorphism with a in A, a^{-1} not in A.
struct WhiteheadAut {
  enum class Kind { TypeI, TypeII };
  Kind kind = Kind::TypeI;

  // Type I: generator g maps to perm[g-1]^{+-1} depending on invert[g-1].
  std::vector<int> perm;
  std::vector<bool> invert;

  // Type II.
  Letter multiplier = 0;
  std::set<Letter> letterSet;

  Word apply(const Word& w, int rank) const;
  bool isIdentityLike() const;
  // Inner type-II auts (A = everything except a^{-1}) fix every cyclic word.
  bool isInner(int rank) const;
  std::string describe(const std::vector<std::string>& names) const;
};

// Complete, duplicate-free enumeration in a fixed deterministic order:
// type I first (single inversions, then transpositions), then all
// 2m * 2^(2m-2) valid type-II automorphisms.
std::vector<WhiteheadAut> enumerateWhiteheadAuts(int rank,
                                                 int rankCap = kDefaultWhiteheadRankCap);

struct MinimalForm {
  CyclicWord word;
  std::set<int> support;
  std::vector<WhiteheadAut> witnessChain;
};

// Greedy first-improvement minimisation of the cyclic length of w over the
// fixed enumeration order. The result admits no single Whitehead move that
// strictly decreases its cyclic length.
MinimalForm minimize(const Word& w, int rank, int rankCap = kDefaultWhiteheadRankCap);

// w is a member of some free basis of F_rank, i.e. minimises to length 1.
bool isPrimitive(const Word& w, int rank, int rankCap = kDefaultWhiteheadRankCap);

}  // namespace orelt
