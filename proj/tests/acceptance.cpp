// End-to-end acceptance checks, one verdict line per criterion.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orelt/classify.hpp"
#include "orelt/dehn.hpp"
#include "orelt/gog.hpp"
#include "orelt/parse.hpp"
#include "orelt/probes.hpp"
#include "orelt/whitehead.hpp"

using namespace orelt;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& run) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = run();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %d: %s - %s [%.2fs]%s\n", number, ok ? "PASS" : "FAIL",
              title.c_str(), secs, note.c_str());
  if (!ok) ++failures;
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ORELT_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Word w(std::vector<Letter> raw, int rank) { return Word::reduce(std::move(raw), rank); }

// Normal form in <a, c; c^2> under c = ab: the independent word-problem
// oracle for <a, b; (ab)^2>.
bool oracleTrivialZstarC2(const Word& u) {
  std::vector<std::pair<bool, long>> stack;  // (isC, aPower)
  auto pushA = [&](long k) {
    if (!stack.empty() && !stack.back().first) {
      stack.back().second += k;
      if (stack.back().second == 0) stack.pop_back();
    } else if (k != 0) {
      stack.push_back({false, k});
    }
  };
  auto pushC = [&]() {
    if (!stack.empty() && stack.back().first) {
      stack.pop_back();
    } else {
      stack.push_back({true, 0});
    }
  };
  for (Letter l : u.letters()) {
    switch (l) {
      case 1: pushA(1); break;
      case -1: pushA(-1); break;
      case 2: pushA(-1); pushC(); break;
      default: pushC(); pushA(1); break;
    }
  }
  return stack.empty();
}

bool verifyFixturePair(const std::string& graph, const std::string& target,
                       const std::string& cert) {
  GraphOfGroups g = parseGraphOfGroups(slurp(graph));
  if (!validateGraph(g).violations.empty()) return false;
  Presentation pi1 = fundamentalGroup(g);
  Presentation goal = parsePresentation(slurp(target));
  return verifyIsomorphic(pi1, goal, parseCertificate(slurp(cert), pi1));
}

}  // namespace

int main() {
  criterion(1, "HNN-shaped decomposition reproduces <a,t;(t^-1 a^-1 t a^2)^2>", [] {
    return verifyFixturePair("fig1.gog", "fig1_target.pres", "fig1.cert");
  });

  criterion(2, "amalgam decomposition reproduces the genus-two quotient (n=3)", [] {
    GraphOfGroups g = parseGraphOfGroups(slurp("fig2.gog"));
    Presentation pi1 = fundamentalGroup(g);
    Word x = w({1, 2, -1, -2}, 4);
    Word y = w({3, 4, -3, -4}, 4);
    Word expected = x.pow(2).concat(y).concat(x.pow(-2)).concat(y).pow(3);
    if (pi1.rank != 4 || pi1.relators.size() != 1 || pi1.relators[0] != expected) {
      return false;
    }
    return verifyFixturePair("fig2.gog", "fig2_target.pres", "fig2.cert");
  });

  criterion(3, "ends biconditional holds for every root (rank 2 <= 6, rank 3 <= 4)", [] {
    EndsHarnessReport r2 = endsLemmaHarness(2, 6, 2);
    EndsHarnessReport r3 = endsLemmaHarness(3, 4, 2);
    return r2.violations.empty() && r3.violations.empty() &&
           r2.rootsChecked == r2.independentRootCount &&
           r3.rootsChecked == r3.independentRootCount && r2.rootsChecked > 0 &&
           r3.rootsChecked > 0;
  });

  criterion(4, "word-problem solver matches the Z*C2 normal form on all words <= 8", [] {
    DehnSolver solver(OneRelatorPresentation::make(2, w({1, 2, 1, 2}, 2)));
    long checked = 0;
    for (const Word& u : allReducedWords(2, 8)) {
      if (solver.isTrivial(u) != oracleTrivialZstarC2(u)) return false;
      ++checked;
    }
    return checked == 4 * (1 + 3 + 9 + 27 + 81 + 243 + 729 + 2187);
  });

  criterion(5, "commutator has order exactly n in <a,b;[a,b]^n> for n=2,3,4", [] {
    Word comm = w({1, 2, -1, -2}, 2);
    for (int n = 2; n <= 4; ++n) {
      OneRelatorPresentation p = OneRelatorPresentation::make(2, comm.pow(n));
      OrderVerdict v = torsionOrder(p, comm, n + 2);
      if (v.status != Status::ProvenTrue || v.order != n) return false;
      if (v.lowerBound.status != Status::ProvenTrue) return false;
      if (v.lowerBound.exclusions.size() != static_cast<std::size_t>(n - 1)) return false;
    }
    return true;
  });

  criterion(6, "primitivity matches the orbit-closure oracle on all words <= 5", [] {
    // closure of the first generator under Whitehead moves, cyclic length <= 5
    auto auts = enumerateWhiteheadAuts(2);
    std::set<CyclicWord> orbit{CyclicWord::of(Word::single(1))};
    std::vector<CyclicWord> frontier(orbit.begin(), orbit.end());
    while (!frontier.empty()) {
      std::vector<CyclicWord> next;
      for (const CyclicWord& at : frontier) {
        for (const auto& a : auts) {
          CyclicWord img = CyclicWord::of(a.apply(at.representative(), 2));
          if (img.size() > 5) continue;
          if (orbit.insert(img).second) next.push_back(img);
        }
      }
      frontier = std::move(next);
    }
    for (const Word& u : allReducedWords(2, 5)) {
      bool oracle = orbit.count(CyclicWord::of(u)) > 0;
      if (isPrimitive(u, 2) != oracle) return false;
    }
    return true;
  });

  criterion(7, "malnormality probes: no witness for <a>, <b>; dihedral witness replays", [] {
    Word comm = w({1, 2, -1, -2}, 2);
    OneRelatorPresentation surface = OneRelatorPresentation::make(2, comm.pow(2));
    SearchBounds wide{5, 3, 6};
    if (malnormalWitnessSearch(surface, w({1}, 2), wide).status != Status::Unknown) {
      return false;
    }
    if (malnormalWitnessSearch(surface, w({2}, 2), wide).status != Status::Unknown) {
      return false;
    }

    OneRelatorPresentation p =
        OneRelatorPresentation::make(2, w({1, 2, 2, 1, 2, 2}, 2));
    Word bc2 = w({1, 2, 2}, 2);
    Word x = bc2.concat(w({2}, 2)).concat(bc2).concat(w({-2}, 2));
    MalnormalityVerdict v = malnormalWitnessSearch(p, x, SearchBounds{4, 2, 6});
    if (v.status != Status::ProvenTrue || !v.witness) return false;
    if (v.witness->i != 1 || v.witness->j != -1) return false;
    DehnSolver solver(p);
    if (!solver.areEqual(
            v.witness->y.inverse().concat(x.pow(v.witness->i)).concat(v.witness->y),
            x.pow(v.witness->j))) {
      return false;
    }
    for (int k = -v.witness->cosetExclusionBound; k <= v.witness->cosetExclusionBound;
         ++k) {
      if (solver.areEqual(v.witness->y, x.pow(k))) return false;
    }
    return true;
  });

  criterion(8, "Fuchsian detection agrees with rotation comparison on all roots <= 6", [] {
    Word comm = w({1, 2, -1, -2}, 2);
    std::set<Word> commRotations;
    for (std::size_t k = 0; k < comm.size(); ++k) {
      commRotations.insert(comm.rotated(k));
      commRotations.insert(comm.inverse().rotated(k));
    }
    for (const CyclicWord& root : allNonPowerCyclicWords(2, 6)) {
      OneRelatorPresentation p =
          OneRelatorPresentation::make(2, root.representative().pow(2));
      bool direct = false;
      Word rep = root.representative();
      for (std::size_t k = 0; k < rep.size(); ++k) {
        if (commRotations.count(rep.rotated(k))) direct = true;
      }
      if (isFuchsian2Gen(p) != direct) return false;
    }
    return true;
  });

  if (failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
  } else {
    std::printf("acceptance: %d criteria failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
