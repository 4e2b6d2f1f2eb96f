#include "orelt/dehn.hpp"

#include <stdexcept>

namespace orelt {

RelatorTable RelatorTable::build(const OneRelatorPresentation& p) {
  if (p.exponent < 2) {
    throw std::domain_error("Dehn reduction requires a torsion exponent n >= 2");
  }
  const Word root = p.root.representative();
  const std::size_t rootLen = root.size();
  const Word full = root.pow(p.exponent);
  const std::size_t fullLen = full.size();
  const std::size_t threshold = (p.exponent - 1) * rootLen;  // pieces are longer

  RelatorTable table;
  table.minLen_ = threshold + 1;
  table.maxLen_ = fullLen;
  for (const Word& base : {full, full.inverse()}) {
    for (std::size_t k = 0; k < fullLen; ++k) {
      Word rotation = base.rotated(k);
      for (std::size_t len = threshold + 1; len <= fullLen; ++len) {
        std::vector<Letter> piece(rotation.letters().begin(),
                                  rotation.letters().begin() + len);
        // rotation = piece * tail = 1 in G, so piece = tail^{-1}.
        Word tail = Word::fromReduced(std::vector<Letter>(
            rotation.letters().begin() + len, rotation.letters().end()));
        table.pieces_.emplace(std::move(piece), tail.inverse());
      }
    }
  }
  return table;
}

std::optional<Word> dehnStep(const Word& w, const RelatorTable& table) {
  const auto& letters = w.letters();
  const std::size_t n = letters.size();
  if (n < table.minPieceLength()) return std::nullopt;
  for (std::size_t start = 0; start < n; ++start) {
    std::size_t longest = std::min(table.maxPieceLength(), n - start);
    for (std::size_t len = longest; len >= table.minPieceLength(); --len) {
      std::vector<Letter> piece(letters.begin() + start, letters.begin() + start + len);
      auto it = table.pieces().find(piece);
      if (it == table.pieces().end()) continue;
      std::vector<Letter> replaced(letters.begin(), letters.begin() + start);
      replaced.insert(replaced.end(), it->second.letters().begin(),
                      it->second.letters().end());
      replaced.insert(replaced.end(), letters.begin() + start + len, letters.end());
      Word out = Word::fromReduced({});
      for (Letter l : replaced) out = out.concat(Word::single(l));
      return out;
    }
  }
  return std::nullopt;
}

DehnSolver::DehnSolver(const OneRelatorPresentation& p) : table_(RelatorTable::build(p)) {}

Word DehnSolver::normalize(const Word& w) const {
  Word current = w;
  while (auto next = dehnStep(current, table_)) {
    current = *next;
  }
  return current;
}

bool DehnSolver::isTrivial(const Word& w) const { return normalize(w).empty(); }

bool DehnSolver::areEqual(const Word& u, const Word& v) const {
  return isTrivial(u.concat(v.inverse()));
}

bool isTrivial(const Word& w, const OneRelatorPresentation& p) {
  return DehnSolver(p).isTrivial(w);
}

bool areEqual(const Word& u, const Word& v, const OneRelatorPresentation& p) {
  return DehnSolver(p).areEqual(u, v);
}

}  // namespace orelt
