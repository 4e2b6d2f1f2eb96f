#include "orelt/whitehead.hpp"

#include <cstdint>
#include <stdexcept>

namespace orelt {

namespace {

// Image of the positive letter +g under a type-II aut (A, a).
Word typeIIImage(int g, Letter a, const std::set<Letter>& A) {
  Letter x = g;
  if (g == generatorOf(a)) return Word::single(x);  // fixes a and a^{-1}
  bool inA = A.count(x) > 0;
  bool invInA = A.count(-x) > 0;
  std::vector<Letter> letters;
  if (inA && !invInA) {
    letters = {x, a};
  } else if (!inA && invInA) {
    letters = {-a, x};
  } else if (inA && invInA) {
    letters = {-a, x, a};
  } else {
    letters = {x};
  }
  return Word::fromReduced(std::move(letters));
}

}  // namespace

Word WhiteheadAut::apply(const Word& w, int rank) const {
  std::vector<Letter> out;
  if (kind == Kind::TypeI) {
    out.reserve(w.size());
    for (Letter l : w.letters()) {
      int g = generatorOf(l);
      Letter image = perm[g - 1];
      if (invert[g - 1]) image = -image;
      out.push_back(l > 0 ? image : -image);
    }
    return Word::reduce(out, rank);
  }
  Word result;
  for (Letter l : w.letters()) {
    Word image = typeIIImage(generatorOf(l), multiplier, letterSet);
    result = result.concat(l > 0 ? image : image.inverse());
  }
  return result;
}

bool WhiteheadAut::isIdentityLike() const {
  if (kind == Kind::TypeI) {
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] != static_cast<int>(i) + 1 || invert[i]) return false;
    }
    return true;
  }
  return letterSet.size() == 1;  // A = {a}
}

bool WhiteheadAut::isInner(int rank) const {
  if (kind != Kind::TypeII) return false;
  return static_cast<int>(letterSet.size()) == 2 * rank - 1;  // everything but a^{-1}
}

std::string WhiteheadAut::describe(const std::vector<std::string>& names) const {
  auto letterName = [&](Letter l) {
    std::string base = generatorOf(l) <= static_cast<int>(names.size())
                           ? names[generatorOf(l) - 1]
                           : "x" + std::to_string(generatorOf(l));
    return l > 0 ? base : base + "^-1";
  };
  if (kind == Kind::TypeI) {
    std::string out = "perm[";
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (i) out += " ";
      out += letterName(invert[i] ? -perm[i] : perm[i]);
    }
    return out + "]";
  }
  std::string out = "mult(" + letterName(multiplier) + "; {";
  bool first = true;
  for (Letter l : letterSet) {
    if (!first) out += " ";
    out += letterName(l);
    first = false;
  }
  return out + "})";
}

std::vector<WhiteheadAut> enumerateWhiteheadAuts(int rank, int rankCap) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (rank > rankCap) {
    throw std::runtime_error("rank " + std::to_string(rank) +
                             " exceeds the Whitehead enumeration cap of " +
                             std::to_string(rankCap));
  }
  std::vector<WhiteheadAut> out;

  // Type I generators: single inversions, then transpositions.
  for (int g = 1; g <= rank; ++g) {
    WhiteheadAut aut;
    aut.kind = WhiteheadAut::Kind::TypeI;
    aut.perm.resize(rank);
    aut.invert.assign(rank, false);
    for (int i = 1; i <= rank; ++i) aut.perm[i - 1] = i;
    aut.invert[g - 1] = true;
    out.push_back(std::move(aut));
  }
  for (int i = 1; i <= rank; ++i) {
    for (int j = i + 1; j <= rank; ++j) {
      WhiteheadAut aut;
      aut.kind = WhiteheadAut::Kind::TypeI;
      aut.perm.resize(rank);
      aut.invert.assign(rank, false);
      for (int g = 1; g <= rank; ++g) aut.perm[g - 1] = g;
      std::swap(aut.perm[i - 1], aut.perm[j - 1]);
      out.push_back(std::move(aut));
    }
  }

  // Type II: for each multiplier a, every subset of the 2m-2 letters other
  // than a and a^{-1}, together with a itself. The construction never
  // produces an a^{-1} in A, so all 2m * 2^(2m-2) results are valid.
  std::vector<Letter> multipliers;
  for (int g = 1; g <= rank; ++g) {
    multipliers.push_back(g);
    multipliers.push_back(-g);
  }
  for (Letter a : multipliers) {
    std::vector<Letter> rest;
    for (int g = 1; g <= rank; ++g) {
      if (g == generatorOf(a)) continue;
      rest.push_back(g);
      rest.push_back(-g);
    }
    std::uint64_t subsets = std::uint64_t{1} << rest.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      WhiteheadAut aut;
      aut.kind = WhiteheadAut::Kind::TypeII;
      aut.multiplier = a;
      aut.letterSet.insert(a);
      for (std::size_t bit = 0; bit < rest.size(); ++bit) {
        if (mask & (std::uint64_t{1} << bit)) aut.letterSet.insert(rest[bit]);
      }
      out.push_back(std::move(aut));
    }
  }
  return out;
}

MinimalForm minimize(const Word& w, int rank, int rankCap) {
  if (w.empty()) throw std::invalid_argument("cannot minimise the empty word");
  std::vector<WhiteheadAut> auts = enumerateWhiteheadAuts(rank, rankCap);
  MinimalForm form;
  form.word = CyclicWord::of(w);
  bool improved = true;
  while (improved) {
    improved = false;
    for (const WhiteheadAut& aut : auts) {
      Word image = aut.apply(form.word.representative(), rank);
      CyclicWord reduced = CyclicWord::of(image);
      if (reduced.size() < form.word.size()) {
        form.word = reduced;
        form.witnessChain.push_back(aut);
        improved = true;
        break;
      }
    }
  }
  form.support = form.word.representative().support();
  return form;
}

bool isPrimitive(const Word& w, int rank, int rankCap) {
  if (w.empty()) throw std::invalid_argument("primitivity of the empty word is undefined");
  return minimize(w, rank, rankCap).word.size() == 1;
}

}  // namespace orelt
