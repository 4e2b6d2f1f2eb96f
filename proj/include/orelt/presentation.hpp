#pragma once

#include <string>
#include <vector>

#include "orelt/words.hpp"

namespace orelt {

// A finite presentation <names; relators>. Generator i (1-based) carries
// names[i-1]; core algorithms ignore the names, the parser and printers
// keep them in sync.
struct Presentation {
  int rank = 0;
  std::vector<Word> relators;
  std::vector<std::string> names;

  static std::vector<std::string> defaultNames(int rank);

  // Validates ranks/relator indices and fills in default names.
  static Presentation make(int rank, std::vector<Word> relators,
                           std::vector<std::string> names = {});
};

// <X; R^n> with R cyclically reduced and not a proper power.
struct OneRelatorPresentation {
  int rank = 0;
  CyclicWord root;
  int exponent = 1;  // n >= 1
  std::vector<std::string> names;

  // Extracts root and exponent from an arbitrary nonempty relator word.
  static OneRelatorPresentation make(int rank, const Word& relator,
                                     std::vector<std::string> names = {});

  bool hasTorsion() const { return exponent >= 2; }
  Word relator() const { return root.representative().pow(exponent); }
  Presentation asPresentation() const;
  // The torsion-free quotient <X; R>.
  OneRelatorPresentation hat() const;
};

}  // namespace orelt
