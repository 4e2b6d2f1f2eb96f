#include "orelt/classify.hpp"

#include <map>
#include <stdexcept>

#include "orelt/dehn.hpp"

namespace orelt {

const char* endsName(EndsClass e) {
  switch (e) {
    case EndsClass::Zero: return "zero";
    case EndsClass::One: return "one";
    case EndsClass::Two: return "two";
    case EndsClass::Infinite: return "infinite";
  }
  return "?";
}

FreeFactorization decomposeFreeFactors(const OneRelatorPresentation& p, int rankCap) {
  MinimalForm minimal = minimize(p.root.representative(), p.rank, rankCap);
  std::vector<int> coreGens(minimal.support.begin(), minimal.support.end());
  std::map<int, int> renumber;
  for (std::size_t i = 0; i < coreGens.size(); ++i) {
    renumber[coreGens[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Letter> relabelled;
  for (Letter l : minimal.word.representative().letters()) {
    int target = renumber.at(generatorOf(l));
    relabelled.push_back(l > 0 ? target : -target);
  }
  int coreRank = static_cast<int>(coreGens.size());
  Word coreRoot = Word::reduce(relabelled, coreRank);

  std::vector<std::string> coreNames;
  for (int g : coreGens) {
    coreNames.push_back(g <= static_cast<int>(p.names.size()) ? p.names[g - 1]
                                                              : "x" + std::to_string(g));
  }
  FreeFactorization out;
  out.core = OneRelatorPresentation::make(coreRank, coreRoot.pow(p.exponent), coreNames);
  out.freeRank = p.rank - coreRank;
  out.coreGenerators = std::move(coreGens);
  out.minimal = std::move(minimal);
  return out;
}

EndsReport classifyEnds(const OneRelatorPresentation& p, int rankCap) {
  if (p.rank < 2 || p.exponent < 2) {
    throw std::domain_error("ends classification requires m >= 2 and n >= 2");
  }
  MinimalForm minimal = minimize(p.root.representative(), p.rank, rankCap);
  EndsReport report;
  report.supportSize = static_cast<int>(minimal.support.size());
  report.rootPrimitive = minimal.word.size() == 1;

  // G has one end iff it admits no free factor, i.e. the minimal relator
  // touches every generator.
  report.endsG = report.supportSize == p.rank ? EndsClass::One : EndsClass::Infinite;

  // Ghat = <X; R> from the free-factor case analysis.
  if (report.rootPrimitive) {
    report.endsGhat = p.rank == 2 ? EndsClass::Two : EndsClass::Infinite;
  } else if (report.supportSize == p.rank) {
    report.endsGhat = EndsClass::One;
  } else {
    report.endsGhat = EndsClass::Infinite;
  }

  bool gInfinite = report.endsG == EndsClass::Infinite;
  bool ghatInfiniteOrCyclic =
      report.endsGhat == EndsClass::Infinite || report.endsGhat == EndsClass::Two;
  report.lemmaConsistent = gInfinite == ghatInfiniteOrCyclic;
  return report;
}

OrderVerdict torsionOrder(const OneRelatorPresentation& p, const Word& w, int bound,
                          int maxQuotientDegree) {
  if (bound < 1) throw std::invalid_argument("order bound must be at least 1");
  OrderVerdict verdict;
  verdict.boundSearched = bound;
  if (!p.hasTorsion()) return verdict;  // no Dehn solver available for n = 1

  DehnSolver solver(p);
  Presentation generic = p.asPresentation();
  for (int d = 1; d <= bound; ++d) {
    if (!solver.isTrivial(w.pow(d))) continue;
    verdict.lowerBound = certifyOrderLowerBound(generic, w, d, maxQuotientDegree);
    if (verdict.lowerBound.status == Status::ProvenTrue) {
      verdict.status = Status::ProvenTrue;
      verdict.order = d;
    }
    return verdict;  // least trivialising power found; Unknown if uncertified
  }
  return verdict;
}

bool isFuchsian2Gen(const OneRelatorPresentation& p) {
  if (p.rank != 2) throw std::domain_error("the Fuchsian criterion applies to m = 2 only");
  Word commutator = Word::reduce({1, 2, -1, -2}, 2);
  CyclicWord target = CyclicWord::of(commutator);
  return p.root == target || p.root == target.inverse();
}

}  // namespace orelt
