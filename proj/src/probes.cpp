#include "orelt/probes.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "orelt/abelian.hpp"
#include "orelt/classify.hpp"
#include "orelt/dehn.hpp"
#include "orelt/parse.hpp"

namespace orelt {

namespace {

// Power order 1, -1, 2, -2, ... for deterministic first-witness selection.
std::vector<int> signedPowers(int cap) {
  std::vector<int> out;
  for (int k = 1; k <= cap; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

}  // namespace

MalnormalityVerdict malnormalWitnessSearch(const OneRelatorPresentation& p,
                                           const Word& x, const SearchBounds& bounds) {
  DehnSolver solver(p);
  if (solver.isTrivial(x)) {
    throw std::domain_error("malnormality probe requires a nontrivial element");
  }
  MalnormalityVerdict verdict;
  verdict.bounds = bounds;

  std::vector<int> powers = signedPowers(bounds.maxPower);
  std::vector<Word> candidates = allReducedWords(p.rank, bounds.maxWitnessLength);

  for (const Word& y : candidates) {
    bool inCyclic = false;
    std::optional<MalnormalityWitness> found;
    for (int i : powers) {
      Word xi = x.pow(i);
      if (solver.isTrivial(xi)) continue;
      Word conjugated = y.inverse().concat(xi).concat(y);
      for (int j : powers) {
        ++verdict.candidatesTried;
        Word xj = x.pow(j);
        if (solver.isTrivial(xj)) continue;
        if (!solver.areEqual(conjugated, xj)) continue;
        // Candidate relation holds; make sure y is not a power of x.
        for (int k = -bounds.maxCosetPower; k <= bounds.maxCosetPower && !inCyclic; ++k) {
          if (solver.areEqual(y, x.pow(k))) inCyclic = true;
        }
        if (inCyclic) break;
        found = MalnormalityWitness{y, i, j, bounds.maxCosetPower};
        break;
      }
      if (inCyclic || found) break;
    }
    if (found) {
      verdict.status = Status::ProvenTrue;
      verdict.witness = found;
      return verdict;
    }
  }
  return verdict;
}

namespace {

bool searchConjugateProduct(const Word& target, const Word& root,
                            const std::vector<Word>& conjugators, int maxFactors,
                            std::vector<ConjugateFactor>& factors, const Word& partial) {
  if (partial == target) return true;
  if (static_cast<int>(factors.size()) == maxFactors) return false;
  int remaining = maxFactors - static_cast<int>(factors.size());
  std::size_t budget = target.size() +
                       static_cast<std::size_t>(remaining) *
                           (2 * conjugators.back().size() + root.size());
  if (partial.size() > budget) return false;
  for (const Word& u : conjugators) {
    for (int sign : {1, -1}) {
      Word factor = u.concat(sign > 0 ? root : root.inverse()).concat(u.inverse());
      factors.push_back({u, sign});
      if (searchConjugateProduct(target, root, conjugators, maxFactors, factors,
                                 partial.concat(factor))) {
        return true;
      }
      factors.pop_back();
    }
  }
  return false;
}

}  // namespace

TMembershipVerdict tMembership(const OneRelatorPresentation& p, const Word& w,
                               const SearchBounds& bounds, int maxQuotientDegree) {
  TMembershipVerdict verdict;
  verdict.bounds = bounds;
  if (w.empty()) {
    verdict.status = Status::ProvenTrue;  // the identity lies in every subgroup
    return verdict;
  }

  // w lies in T iff its image in Ghat = <X; R> is trivial, so any
  // separation of w in Ghat refutes membership.
  Presentation ghat = p.hat().asPresentation();
  if (nontrivialInAbelianization(ghat, w)) {
    verdict.status = Status::ProvenFalse;
    verdict.abelianObstruction = true;
    return verdict;
  }
  NontrivialityVerdict nt = certifyNontrivial(ghat, w, maxQuotientDegree);
  if (nt.status == Status::ProvenTrue) {
    verdict.status = Status::ProvenFalse;
    verdict.quotientWitness = nt.witness;
    return verdict;
  }

  // Bounded positive search: w as a free-group product of conjugates of
  // R^{+-1}.
  std::vector<Word> conjugators{Word()};
  for (const Word& u : allReducedWords(p.rank, bounds.maxWitnessLength)) {
    conjugators.push_back(u);
  }
  std::vector<ConjugateFactor> factors;
  if (searchConjugateProduct(w, p.root.representative(), conjugators, bounds.maxPower,
                             factors, Word())) {
    verdict.status = Status::ProvenTrue;
    verdict.productCertificate = factors;
  }
  return verdict;
}

namespace {

// Independent recount of canonical non-power cyclic roots: odometer over
// raw letter sequences instead of reduced-word tree growth.
long independentRootCount(int rank, int maxLength) {
  std::vector<Letter> alphabet;
  for (int g = 1; g <= rank; ++g) {
    alphabet.push_back(g);
    alphabet.push_back(-g);
  }
  long count = 0;
  for (int len = 1; len <= maxLength; ++len) {
    std::vector<int> idx(len, 0);
    for (;;) {
      std::vector<Letter> letters;
      for (int i : idx) letters.push_back(alphabet[i]);
      Word w = Word::fromReduced(letters);  // reducedness checked below
      bool reduced = true;
      for (int i = 0; i + 1 < len && reduced; ++i) {
        reduced = letters[i] != -letters[i + 1];
      }
      if (reduced && len > 1) reduced = letters[0] != -letters[len - 1];
      if (reduced && !isProperPower(w) && CyclicWord::of(w).representative() == w) {
        ++count;
      }
      int pos = len - 1;
      while (pos >= 0 && ++idx[pos] == static_cast<int>(alphabet.size())) {
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return count;
}

}  // namespace

EndsHarnessReport endsLemmaHarness(int rank, int maxRootLength, int n, int maxRank,
                                   int maxLength) {
  if (rank < 2 || rank > maxRank) {
    throw std::runtime_error("harness rank " + std::to_string(rank) +
                             " outside the configured range");
  }
  if (maxRootLength < 1 || maxRootLength > maxLength) {
    throw std::runtime_error("harness root length cap exceeded");
  }
  if (n < 2) throw std::invalid_argument("harness requires a torsion exponent n >= 2");

  auto start = std::chrono::steady_clock::now();
  EndsHarnessReport report;
  report.rank = rank;
  report.maxRootLength = maxRootLength;
  report.exponent = n;

  std::vector<std::string> names = Presentation::defaultNames(rank);
  for (const CyclicWord& root : allNonPowerCyclicWords(rank, maxRootLength)) {
    ++report.rootsChecked;
    OneRelatorPresentation p =
        OneRelatorPresentation::make(rank, root.representative().pow(n), names);
    EndsReport ends = classifyEnds(p);
    if (!ends.lemmaConsistent) {
      report.violations.push_back("root " + printWord(root.representative(), names) +
                                  ": G " + endsName(ends.endsG) + ", Ghat " +
                                  endsName(ends.endsGhat));
    }
  }
  report.independentRootCount = independentRootCount(rank, maxRootLength);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string formatHarnessReport(const EndsHarnessReport& report) {
  std::ostringstream out;
  out << "harness: ends-lemma\n";
  out << "rank: " << report.rank << "\n";
  out << "max-root-length: " << report.maxRootLength << "\n";
  out << "exponent: " << report.exponent << "\n";
  out << "roots-checked: " << report.rootsChecked << "\n";
  out << "independent-root-count: " << report.independentRootCount << "\n";
  out << "enumeration-consistent: "
      << (report.rootsChecked == report.independentRootCount ? "true" : "false") << "\n";
  out << "violations: " << report.violations.size() << "\n";
  for (const std::string& v : report.violations) out << "violation: " << v << "\n";
  return out.str();
}

}  // namespace orelt
