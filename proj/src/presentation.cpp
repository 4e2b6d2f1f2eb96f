#include "orelt/presentation.hpp"

#include <stdexcept>

namespace orelt {

std::vector<std::string> Presentation::defaultNames(int rank) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (int g = 1; g <= rank; ++g) names.push_back("x" + std::to_string(g));
  return names;
}

Presentation Presentation::make(int rank, std::vector<Word> relators,
                                std::vector<std::string> names) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  for (const Word& r : relators) {
    if (r.maxGenerator() > rank) {
      throw std::invalid_argument("relator uses a generator beyond the rank");
    }
  }
  if (names.empty()) {
    names = defaultNames(rank);
  } else if (static_cast<int>(names.size()) != rank) {
    throw std::invalid_argument("name count does not match rank");
  }
  Presentation p;
  p.rank = rank;
  p.relators = std::move(relators);
  p.names = std::move(names);
  return p;
}

OneRelatorPresentation OneRelatorPresentation::make(int rank, const Word& relator,
                                                    std::vector<std::string> names) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (relator.maxGenerator() > rank) {
    throw std::invalid_argument("relator uses a generator beyond the rank");
  }
  auto [root, n] = rootAndExponent(relator);
  OneRelatorPresentation p;
  p.rank = rank;
  p.root = root;
  p.exponent = n;
  if (names.empty()) {
    p.names = Presentation::defaultNames(rank);
  } else if (static_cast<int>(names.size()) != rank) {
    throw std::invalid_argument("name count does not match rank");
  } else {
    p.names = std::move(names);
  }
  return p;
}

Presentation OneRelatorPresentation::asPresentation() const {
  return Presentation::make(rank, {relator()}, names);
}

OneRelatorPresentation OneRelatorPresentation::hat() const {
  OneRelatorPresentation p = *this;
  p.exponent = 1;
  return p;
}

}  // namespace orelt
