#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orelt/classify.hpp"

using namespace orelt;

namespace {

Word w(std::vector<Letter> raw, int rank = 3) { return Word::reduce(raw, rank); }

OneRelatorPresentation pres(int rank, std::vector<Letter> relator) {
  return OneRelatorPresentation::make(rank, Word::reduce(std::move(relator), rank));
}

Word comm(Letter a, Letter b) { return Word::reduce({a, b, -a, -b}, 4); }

}  // namespace

TEST_CASE("free factor decomposition") {
  // c is absent from [a,b]^2, and the commutator cannot shrink further
  FreeFactorization f1 = decomposeFreeFactors(pres(3, {1, 2, -1, -2, 1, 2, -1, -2}));
  CHECK(f1.core.rank == 2);
  CHECK(f1.freeRank == 1);
  CHECK(f1.coreGenerators == std::vector<int>{1, 2});
  CHECK(f1.core.rank + f1.freeRank == 3);
  CHECK(f1.core.root.representative().support() == std::set<int>{1, 2});

  // a primitive root minimises to a single letter, so the whole complement
  // splits off free: <a,b,c;(ab)^2> = <z;z^2> * F(2)
  FreeFactorization prim = decomposeFreeFactors(pres(3, {1, 2, 1, 2}));
  CHECK(prim.core.rank == 1);
  CHECK(prim.freeRank == 2);
  CHECK(prim.core.root.size() == 1);
  CHECK(prim.core.exponent == 2);

  FreeFactorization f2 = decomposeFreeFactors(pres(2, {1, 2, -1, -2, 1, 2, -1, -2}));
  CHECK(f2.core.rank == 2);
  CHECK(f2.freeRank == 0);

  // (a b a^-1)^2 minimises to a single letter, so one generator survives
  FreeFactorization f3 = decomposeFreeFactors(pres(2, {1, 2, -1, 1, 2, -1}));
  CHECK(f3.core.rank == 1);
  CHECK(f3.freeRank == 1);
  CHECK(f3.core.root.size() == 1);
  CHECK(f3.core.exponent == 2);
}

TEST_CASE("ends classification") {
  EndsReport oneEnded = classifyEnds(pres(2, {1, 2, -1, -2, 1, 2, -1, -2}));
  CHECK(oneEnded.endsG == EndsClass::One);
  CHECK(oneEnded.endsGhat == EndsClass::One);
  CHECK(oneEnded.lemmaConsistent);
  CHECK(oneEnded.supportSize == 2);
  CHECK_FALSE(oneEnded.rootPrimitive);

  // <a,b; a^2> = C2 * Z, Ghat = Z
  EndsReport c2z = classifyEnds(pres(2, {1, 1}));
  CHECK(c2z.endsG == EndsClass::Infinite);
  CHECK(c2z.endsGhat == EndsClass::Two);
  CHECK(c2z.lemmaConsistent);
  CHECK(c2z.rootPrimitive);

  EndsReport f2quot = classifyEnds(pres(3, {1, 1}));
  CHECK(f2quot.endsG == EndsClass::Infinite);
  CHECK(f2quot.endsGhat == EndsClass::Infinite);
  CHECK(f2quot.lemmaConsistent);

  // non-primitive relator missing a generator: infinitely ended both sides
  EndsReport partial = classifyEnds(pres(3, {1, 2, 1, 2}));
  CHECK(partial.endsG == EndsClass::Infinite);
  CHECK(partial.endsGhat == EndsClass::Infinite);
  CHECK(partial.lemmaConsistent);

  CHECK_THROWS_AS(classifyEnds(pres(1, {1, 1})), std::domain_error);
  CHECK_THROWS_AS(classifyEnds(OneRelatorPresentation::make(2, Word::reduce({1, 2}, 2))),
                  std::domain_error);
}

TEST_CASE("torsion order") {
  OneRelatorPresentation commCubed = pres(2, {1, 2, -1, -2, 1, 2, -1, -2, 1, 2, -1, -2});
  OrderVerdict v3 = torsionOrder(commCubed, comm(1, 2), 6);
  CHECK(v3.status == Status::ProvenTrue);
  CHECK(v3.order == 3);
  CHECK(v3.lowerBound.status == Status::ProvenTrue);

  OneRelatorPresentation abSquared = pres(2, {1, 2, 1, 2});
  OrderVerdict v2 = torsionOrder(abSquared, w({1, 2}, 2), 4);
  CHECK(v2.status == Status::ProvenTrue);
  CHECK(v2.order == 2);

  OneRelatorPresentation commSquared = pres(2, {1, 2, -1, -2, 1, 2, -1, -2});
  OrderVerdict infinite = torsionOrder(commSquared, w({1}, 2), 8);
  CHECK(infinite.status == Status::Unknown);
  CHECK(infinite.boundSearched == 8);
}

TEST_CASE("relator root order equals the exponent") {
  for (int n = 2; n <= 3; ++n) {
    OneRelatorPresentation p =
        OneRelatorPresentation::make(2, comm(1, 2).pow(n));
    OrderVerdict v = torsionOrder(p, comm(1, 2), n + 2);
    CHECK(v.status == Status::ProvenTrue);
    CHECK(v.order == n);
  }
}

TEST_CASE("two generator fuchsian criterion") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(isFuchsian2Gen(OneRelatorPresentation::make(2, comm(1, 2).pow(n))));
  }
  // (b a b^-1 a^-1)^5 is a rotation of the inverse commutator
  CHECK(isFuchsian2Gen(OneRelatorPresentation::make(2, w({2, 1, -2, -1}, 2).pow(5))));
  CHECK_FALSE(isFuchsian2Gen(pres(2, {1, 1, 2, 2, 1, 1, 2, 2})));
  CHECK_THROWS_AS(isFuchsian2Gen(pres(3, {1, 2, -1, -2, 1, 2, -1, -2})),
                  std::domain_error);

  // invariance under rotation and inversion of the relator root
  Word root = comm(1, 2);
  for (std::size_t k = 0; k < root.size(); ++k) {
    CHECK(isFuchsian2Gen(OneRelatorPresentation::make(2, root.rotated(k).pow(2))));
    CHECK(isFuchsian2Gen(
        OneRelatorPresentation::make(2, root.inverse().rotated(k).pow(2))));
  }
}
