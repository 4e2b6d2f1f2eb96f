#include "orelt/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace orelt {

Word Word::reduce(const std::vector<Letter>& raw, int rank) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    int g = generatorOf(l);
    if (g < 1 || g > rank) {
      throw std::invalid_argument("generator index out of range: " + std::to_string(l));
    }
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return fromReduced(std::move(out));
}

Word Word::fromReduced(std::vector<Letter> letters) {
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = -l;
  return fromReduced(std::move(out));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out = letters_;
  for (Letter l : other.letters_) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return fromReduced(std::move(out));
}

Word Word::pow(int k) const {
  Word base = k < 0 ? inverse() : *this;
  int reps = k < 0 ? -k : k;
  Word out;
  for (int i = 0; i < reps; ++i) out = out.concat(base);
  return out;
}

Word Word::cyclicReduce() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  return fromReduced(std::vector<Letter>(letters_.begin() + lo, letters_.begin() + hi));
}

Word Word::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  std::vector<Letter> out;
  out.reserve(letters_.size());
  out.insert(out.end(), letters_.begin() + k, letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + k);
  return fromReduced(std::move(out));
}

int Word::maxGenerator() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, generatorOf(l));
  return m;
}

std::set<int> Word::support() const {
  std::set<int> s;
  for (Letter l : letters_) s.insert(generatorOf(l));
  return s;
}

bool Word::operator<(const Word& other) const {
  if (letters_.size() != other.letters_.size()) {
    return letters_.size() < other.letters_.size();
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    int a = letterKey(letters_[i]), b = letterKey(other.letters_[i]);
    if (a != b) return a < b;
  }
  return false;
}

CyclicWord CyclicWord::of(const Word& w) {
  Word core = w.cyclicReduce();
  CyclicWord out;
  out.rep_ = core;
  for (std::size_t k = 1; k < core.size(); ++k) {
    Word rot = core.rotated(k);
    if (rot < out.rep_) out.rep_ = rot;
  }
  return out;
}

std::pair<CyclicWord, int> rootAndExponent(const Word& w) {
  Word core = w.cyclicReduce();
  if (core.empty()) {
    throw std::invalid_argument("root of the empty word is undefined");
  }
  std::size_t len = core.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < len && periodic; ++i) {
      periodic = core.at(i) == core.at(i % d);
    }
    if (periodic) {
      Word root = Word::fromReduced(
          std::vector<Letter>(core.letters().begin(), core.letters().begin() + d));
      return {CyclicWord::of(root), static_cast<int>(len / d)};
    }
  }
  return {CyclicWord::of(core), 1};
}

bool isProperPower(const Word& w) {
  if (w.cyclicReduce().empty()) return false;
  return rootAndExponent(w).second > 1;
}

int exponentSum(const Word& w, int gen) {
  int total = 0;
  for (Letter l : w.letters()) {
    if (l == gen) ++total;
    if (l == -gen) --total;
  }
  return total;
}

namespace {

std::vector<Letter> orderedAlphabet(int rank) {
  std::vector<Letter> alphabet;
  for (int g = 1; g <= rank; ++g) {
    alphabet.push_back(g);
    alphabet.push_back(-g);
  }
  return alphabet;
}

}  // namespace

std::vector<Word> allReducedWords(int rank, int maxLength) {
  std::vector<Letter> alphabet = orderedAlphabet(rank);
  std::vector<Word> out;
  std::vector<Word> frontier{Word()};
  for (int len = 1; len <= maxLength; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Letter l : alphabet) {
        if (!w.empty() && w.at(w.size() - 1) == -l) continue;
        std::vector<Letter> letters = w.letters();
        letters.push_back(l);
        next.push_back(Word::fromReduced(std::move(letters)));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<CyclicWord> allNonPowerCyclicWords(int rank, int maxLength) {
  std::set<CyclicWord> seen;
  std::vector<CyclicWord> out;
  for (const Word& w : allReducedWords(rank, maxLength)) {
    if (w.cyclicReduce().size() != w.size()) continue;
    CyclicWord c = CyclicWord::of(w);
    if (c.representative() != w) continue;  // canonical rotations only
    if (isProperPower(w)) continue;
    if (seen.insert(c).second) out.push_back(c);
  }
  return out;
}

}  // namespace orelt
