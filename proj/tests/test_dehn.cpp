#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orelt/dehn.hpp"

using namespace orelt;

namespace {

Word w(std::vector<Letter> raw, int rank = 2) { return Word::reduce(raw, rank); }

OneRelatorPresentation pres(std::vector<Letter> relator, int rank = 2) {
  return OneRelatorPresentation::make(rank, w(std::move(relator), rank));
}

// Free-product normal form in <a, c; c^2> = Z * C2, reached from
// <a, b; (ab)^2> by c = ab, b = a^-1 c. Words are syllable lists; a
// trivial word reduces to no syllables.
bool oracleTrivialZstarC2(const Word& u) {
  struct Syllable {
    bool isC;
    long power;  // for the a-syllable
  };
  std::vector<Syllable> stack;
  auto pushA = [&](long k) {
    if (!stack.empty() && !stack.back().isC) {
      stack.back().power += k;
      if (stack.back().power == 0) stack.pop_back();
    } else if (k != 0) {
      stack.push_back({false, k});
    }
  };
  auto pushC = [&]() {
    if (!stack.empty() && stack.back().isC) {
      stack.pop_back();
    } else {
      stack.push_back({true, 0});
    }
  };
  for (Letter l : u.letters()) {
    if (l == 1) {
      pushA(1);
    } else if (l == -1) {
      pushA(-1);
    } else if (l == 2) {  // b = a^-1 c
      pushA(-1);
      pushC();
    } else {  // b^-1 = c^-1 a = c a
      pushC();
      pushA(1);
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("table thresholds") {
  RelatorTable t1 = RelatorTable::build(pres({1, 2, 1, 2}));
  CHECK(t1.minPieceLength() == 3);
  CHECK(t1.maxPieceLength() == 4);

  // (t^-1 a^-1 t a^2)^2: |R| = 5, n = 2, threshold 5, pieces 6..10
  RelatorTable t2 = RelatorTable::build(pres({-2, -1, 2, 1, 1, -2, -1, 2, 1, 1}));
  CHECK(t2.minPieceLength() == 6);
  CHECK(t2.maxPieceLength() == 10);

  // [a,b]^3: threshold 8, pieces 9..12
  RelatorTable t3 = RelatorTable::build(pres(
      {1, 2, -1, -2, 1, 2, -1, -2, 1, 2, -1, -2}));
  CHECK(t3.minPieceLength() == 9);
  CHECK(t3.maxPieceLength() == 12);

  for (const auto& [piece, complement] : t1.pieces()) {
    CHECK(piece.size() > complement.size());
  }

  // torsion-free presentations are out of the solver's domain
  CHECK_THROWS_AS(RelatorTable::build(pres({1, 2})), std::domain_error);
}

TEST_CASE("dehn step") {
  RelatorTable t = RelatorTable::build(pres({1, 2, 1, 2}));
  auto s1 = dehnStep(w({1, 2, 1, 2}), t);
  REQUIRE(s1.has_value());
  CHECK(s1->empty());
  auto s2 = dehnStep(w({1, 2, 1, 2, 1}), t);
  REQUIRE(s2.has_value());
  CHECK(*s2 == w({1}));
  CHECK_FALSE(dehnStep(w({1, 2}), t).has_value());
  // strict decrease on anything it touches
  for (const Word& u : allReducedWords(2, 6)) {
    auto step = dehnStep(u, t);
    if (step) CHECK(step->size() < u.size());
  }
}

TEST_CASE("triviality") {
  DehnSolver solver(pres({1, 2, 1, 2}));
  CHECK(solver.isTrivial(w({1, 2, 1, 2})));
  CHECK(solver.isTrivial(w({-2, -1, -2, -1})));
  CHECK_FALSE(solver.isTrivial(w({1})));
  CHECK(solver.isTrivial(Word()));
  CHECK(solver.areEqual(w({1, 2, 1, 2, 1}), w({1})));
  CHECK_FALSE(solver.areEqual(w({1}), w({2})));
  CHECK(solver.areEqual(w({1, 2, -1}), w({1, 2, -1})));
  CHECK(isTrivial(w({1, 2, 1, 2}), pres({1, 2, 1, 2})));
  CHECK(areEqual(w({1, 2, 1, 2, 1}), w({1}), pres({1, 2, 1, 2})));
}

TEST_CASE("normalize is a fixed point and certifies each step") {
  DehnSolver solver(pres({1, 2, 1, 2}));
  for (const Word& u : allReducedWords(2, 5)) {
    Word n = solver.normalize(u);
    CHECK_FALSE(dehnStep(n, solver.table()).has_value());
    CHECK(solver.areEqual(u, n));
  }
}

TEST_CASE("free product oracle agreement up to length 6") {
  OneRelatorPresentation p = pres({1, 2, 1, 2});
  DehnSolver solver(p);
  CHECK(oracleTrivialZstarC2(w({1, 2, 1, 2})));
  CHECK_FALSE(oracleTrivialZstarC2(w({1})));
  long disagreements = 0;
  for (const Word& u : allReducedWords(2, 6)) {
    if (solver.isTrivial(u) != oracleTrivialZstarC2(u)) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("torsion example from the two generator family") {
  // <a, t; (t^-1 a^-1 t a^2)^2>
  OneRelatorPresentation p = pres({-2, -1, 2, 1, 1, -2, -1, 2, 1, 1});
  DehnSolver solver(p);
  CHECK(solver.isTrivial(p.relator()));
  CHECK_FALSE(solver.isTrivial(p.root.representative()));
  CHECK_FALSE(solver.isTrivial(w({1})));
  CHECK_FALSE(solver.isTrivial(w({2})));
  // R has order 2: R^-1 = R
  CHECK(solver.areEqual(p.root.representative(), p.root.representative().inverse()));
}
