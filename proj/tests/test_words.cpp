#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orelt/words.hpp"

using namespace orelt;

namespace {

Word w(std::vector<Letter> raw, int rank = 4) { return Word::reduce(raw, rank); }

Word randomWord(std::mt19937& rng, int rank, int maxLen) {
  std::uniform_int_distribution<int> len(0, maxLen);
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> raw;
  int n = len(rng);
  for (int i = 0; i < n; ++i) raw.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return Word::reduce(raw, rank);
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(w({1, -1, 2}) == w({2}));
  CHECK(w({}).empty());
  // t^-1 a^-1 t a^2 is already reduced (a=1, t=2).
  Word root = w({-2, -1, 2, 1, 1});
  CHECK(root.size() == 5);
  CHECK(Word::reduce(root.letters(), 2) == root);  // idempotent
  // nested cancellation collapses fully
  CHECK(w({1, 2, -2, -1}).empty());
  CHECK_THROWS(Word::reduce({3}, 2));
  CHECK_THROWS(Word::reduce({0}, 2));
}

TEST_CASE("word algebra") {
  Word u = w({1, 2});
  Word v = w({-2, 1});
  CHECK(u.concat(u.inverse()).empty());
  CHECK(u.concat(v) == w({1, 1}));
  CHECK(u.pow(0).empty());
  CHECK(u.pow(2) == w({1, 2, 1, 2}));
  CHECK(u.pow(-1) == u.inverse());
  CHECK(u.inverse() == w({-2, -1}));
  CHECK(w({1, 2, -1}).cyclicReduce() == w({2}));
  CHECK(w({1, 2, 1}).rotated(1) == w({2, 1, 1}));
  CHECK(w({1, -2, 3}).support() == std::set<int>{1, 2, 3});
  CHECK(w({1, -2, 3}).maxGenerator() == 3);
}

TEST_CASE("letter order is index then sign with positive first") {
  CHECK(letterLess(1, -1));
  CHECK(letterLess(-1, 2));
  CHECK(letterLess(2, -2));
  CHECK(w({1}) < w({-1}));
  CHECK(w({-1}) < w({2}));
  CHECK(w({1}) < w({1, 1}));  // shortlex
}

TEST_CASE("cyclic normal form") {
  CHECK(CyclicWord::of(w({-1, 2, 1})) == CyclicWord::of(w({2})));
  CHECK(CyclicWord::of(w({2, 1, -2, -1})) == CyclicWord::of(w({-1, 2, 1, -2})));
  // canonical rotation of (ab)^2 starts with the least letter
  CHECK(CyclicWord::of(w({2, 1, 2, 1})).representative() == w({1, 2, 1, 2}));
  CHECK(CyclicWord::of(Word()).empty());
}

TEST_CASE("root and exponent") {
  auto [r1, n1] = rootAndExponent(w({-2, -1, 2, 1, 1}).pow(2));
  CHECK(n1 == 2);
  CHECK(r1 == CyclicWord::of(w({-2, -1, 2, 1, 1})));
  auto [r2, n2] = rootAndExponent(w({1, 2}));
  CHECK(n2 == 1);
  CHECK(r2 == CyclicWord::of(w({1, 2})));
  auto [r3, n3] = rootAndExponent(w({1}).pow(6));
  CHECK(n3 == 6);
  CHECK(r3 == CyclicWord::of(w({1})));
  CHECK_THROWS(rootAndExponent(Word()));
  CHECK(isProperPower(w({1, 2, 1, 2})));
  CHECK_FALSE(isProperPower(w({1, 2})));
  // conjugate of a power is a power after cyclic reduction
  CHECK(isProperPower(w({2, 1, 1, -2})));
}

TEST_CASE("exponent sums") {
  Word comm = w({1, 2, -1, -2});
  CHECK(exponentSum(comm, 1) == 0);
  CHECK(exponentSum(comm, 2) == 0);
  CHECK(exponentSum(w({1, 1, 2, 2}), 1) == 2);
  CHECK(exponentSum(w({-2, -1, 2, 1, 1}).pow(2), 1) == 2);
  CHECK(exponentSum(w({-2, -1, 2, 1, 1}).pow(2), 2) == 0);
}

TEST_CASE("random word properties") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    Word u = randomWord(rng, 3, 8);
    Word v = randomWord(rng, 3, 8);
    CHECK(u.concat(u.inverse()).empty());
    CHECK(u.concat(v).inverse() == v.inverse().concat(u.inverse()));
    CHECK(u.concat(v).size() <= u.size() + v.size());
    CHECK(CyclicWord::of(u.concat(v).concat(u.inverse())) == CyclicWord::of(v));
    for (int g = 1; g <= 3; ++g) {
      CHECK(exponentSum(u.concat(v), g) == exponentSum(u, g) + exponentSum(v, g));
    }
    if (!u.empty()) {
      auto [root, n] = rootAndExponent(u);
      CHECK(CyclicWord::of(root.representative().pow(n)) == CyclicWord::of(u));
      CHECK_FALSE(isProperPower(root.representative()));
    }
  }
}

TEST_CASE("reduced word enumeration") {
  // 2m * (2m-1)^(L-1) words of each length L
  auto words = allReducedWords(2, 3);
  CHECK(words.size() == 4 + 12 + 36);
  for (std::size_t i = 1; i < words.size(); ++i) {
    CHECK((words[i - 1].size() < words[i].size() ||
           (words[i - 1].size() == words[i].size() && words[i - 1] < words[i])));
  }
  CHECK(words.front() == w({1}));
  CHECK(allReducedWords(3, 2).size() == 6 + 30);
}

TEST_CASE("non-power cyclic word enumeration") {
  auto roots = allNonPowerCyclicWords(2, 2);
  // length 1: a, a^-1, b, b^-1; length 2: ab, ab^-1, a^-1 b, a^-1 b^-1
  CHECK(roots.size() == 8);
  for (const CyclicWord& c : roots) {
    CHECK_FALSE(isProperPower(c.representative()));
    CHECK(CyclicWord::of(c.representative()) == c);
  }
  // duplicates under rotation are collapsed: ba appears only as ab
  int count = 0;
  for (const CyclicWord& c : roots) {
    if (c == CyclicWord::of(w({2, 1}))) ++count;
  }
  CHECK(count == 1);
}
