#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace orelt {

// A signed generator letter: +g or -g with g in 1..rank.
using Letter = int;

inline Letter inverseOf(Letter l) { return -l; }
inline int generatorOf(Letter l) { return l < 0 ? -l : l; }

// Total order on letters: compare (index, sign) with +1 < -1.
inline int letterKey(Letter l) { return 2 * generatorOf(l) + (l < 0 ? 1 : 0); }

inline bool letterLess(Letter a, Letter b) { return letterKey(a) < letterKey(b); }

// A freely reduced word over the generators of a free group. The ambient
// rank is not stored; construction validates against it.
class Word {
 public:
  Word() = default;

  // Freely reduces `raw`, validating that every index lies in 1..rank.
  static Word reduce(const std::vector<Letter>& raw, int rank);

  // Wraps a sequence that is already known to be freely reduced.
  static Word fromReduced(std::vector<Letter> letters);

  static Word single(Letter l) { return fromReduced({l}); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  Word inverse() const;
  Word concat(const Word& other) const;
  Word pow(int k) const;

  // Strips conjugating pairs u ... u^{-1} from the ends.
  Word cyclicReduce() const;

  Word rotated(std::size_t k) const;

  int maxGenerator() const;
  std::set<int> support() const;

  bool operator==(const Word& other) const { return letters_ == other.letters_; }
  bool operator!=(const Word& other) const { return letters_ != other.letters_; }
  // Shortlex under letterKey.
  bool operator<(const Word& other) const;

 private:
  std::vector<Letter> letters_;
};

// Canonical representative of a conjugacy class in the free group: the
// cyclic reduction of a word, rotated to its least rotation under the
// shortlex letter order. Two words are conjugate iff their CyclicWords
// are equal.
class CyclicWord {
 public:
  CyclicWord() = default;
  static CyclicWord of(const Word& w);

  const Word& representative() const { return rep_; }
  std::size_t size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }

  CyclicWord inverse() const { return of(rep_.inverse()); }

  bool operator==(const CyclicWord& o) const { return rep_ == o.rep_; }
  bool operator!=(const CyclicWord& o) const { return rep_ != o.rep_; }
  bool operator<(const CyclicWord& o) const { return rep_ < o.rep_; }

 private:
  Word rep_;
};

// Writes the cyclic reduction of `w` as root^n with n maximal. Throws
// std::invalid_argument on the empty word.
std::pair<CyclicWord, int> rootAndExponent(const Word& w);

bool isProperPower(const Word& w);

// Signed count of occurrences of generator `gen` in `w`.
int exponentSum(const Word& w, int gen);

// All freely reduced words of length 1..maxLength over 1..rank, in
// length-then-shortlex order. The empty word is not included.
std::vector<Word> allReducedWords(int rank, int maxLength);

// All canonical cyclic words of length 1..maxLength over 1..rank that are
// not proper powers, in length-then-shortlex order.
std::vector<CyclicWord> allNonPowerCyclicWords(int rank, int maxLength);

}  // namespace orelt
