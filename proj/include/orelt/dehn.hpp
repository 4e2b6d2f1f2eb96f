#pragma once

#include <map>
#include <optional>

#include "orelt/presentation.hpp"
#include "orelt/words.hpp"

namespace orelt {

// Lookup table for greedy Dehn reduction in <X; R^n>, n >= 2. Stores every
// subword S of every cyclic rotation of R^{+-n} with |S| > (n-1)|R|,
// together with the strictly shorter complement word that equals S in the
// group. Newman's spelling theorem guarantees every nonempty trivial word
// contains such a subword, so repeated replacement decides triviality.
class RelatorTable {
 public:
  static RelatorTable build(const OneRelatorPresentation& p);

  const std::map<std::vector<Letter>, Word>& pieces() const { return pieces_; }
  std::size_t minPieceLength() const { return minLen_; }
  std::size_t maxPieceLength() const { return maxLen_; }

 private:
  std::map<std::vector<Letter>, Word> pieces_;
  std::size_t minLen_ = 0;
  std::size_t maxLen_ = 0;
};

// Replaces the leftmost longest stored subword of w by its complement and
// freely reduces; nullopt when no stored subword occurs. The result is
// always strictly shorter than w.
std::optional<Word> dehnStep(const Word& w, const RelatorTable& table);

// Word-problem solver with a prebuilt table, for bulk queries.
class DehnSolver {
 public:
  explicit DehnSolver(const OneRelatorPresentation& p);

  bool isTrivial(const Word& w) const;
  bool areEqual(const Word& u, const Word& v) const;
  // The Dehn-irreducible fixed point of w.
  Word normalize(const Word& w) const;
  const RelatorTable& table() const { return table_; }

 private:
  RelatorTable table_;
};

bool isTrivial(const Word& w, const OneRelatorPresentation& p);
bool areEqual(const Word& u, const Word& v, const OneRelatorPresentation& p);

}  // namespace orelt
