#include "orelt/report.hpp"

#include <sstream>

#include "orelt/classify.hpp"
#include "orelt/dehn.hpp"
#include "orelt/parse.hpp"
#include "orelt/quotients.hpp"
#include "orelt/whitehead.hpp"

namespace orelt {

namespace {

void echoPresentation(std::ostringstream& out, const OneRelatorPresentation& p) {
  out << "rank: " << p.rank << "\n";
  out << "root: " << printWord(p.root.representative(), p.names) << "\n";
  out << "exponent: " << p.exponent << "\n";
}

std::string permString(const Perm& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

void echoHom(std::ostringstream& out, const std::string& prefix,
             const FiniteQuotientHom& hom) {
  out << prefix << ".degree: " << hom.degree << "\n";
  for (std::size_t i = 0; i < hom.images.size(); ++i) {
    out << prefix << ".image." << i + 1 << ": " << permString(hom.images[i]) << "\n";
  }
}

const char* boolName(bool b) { return b ? "true" : "false"; }

}  // namespace

ReportResult reportClassify(const OneRelatorPresentation& p, int whiteheadCap) {
  std::ostringstream out;
  out << "command: classify\n";
  echoPresentation(out, p);
  out << "whitehead-cap: " << whiteheadCap << "\n";

  FreeFactorization f = decomposeFreeFactors(p, whiteheadCap);
  out << "minimal-root: " << printWord(f.minimal.word.representative(), p.names) << "\n";
  out << "free-rank: " << f.freeRank << "\n";
  out << "core-rank: " << f.core.rank << "\n";

  bool negative = false;
  if (p.rank >= 2 && p.exponent >= 2) {
    EndsReport ends = classifyEnds(p, whiteheadCap);
    out << "ends.G: " << endsName(ends.endsG) << "\n";
    out << "ends.Ghat: " << endsName(ends.endsGhat) << "\n";
    out << "lemma-consistent: " << boolName(ends.lemmaConsistent) << "\n";
    out << "root-primitive: " << boolName(ends.rootPrimitive) << "\n";
    out << "support-size: " << ends.supportSize << "\n";
  } else {
    out << "ends.G: skipped\n";
  }
  out << "torsion: " << boolName(p.hasTorsion()) << "\n";
  if (p.rank == 2) {
    out << "fuchsian: " << boolName(isFuchsian2Gen(p)) << "\n";
  }
  return {out.str(), negative};
}

ReportResult reportWordProblem(const OneRelatorPresentation& p, const Word& u,
                               const std::optional<Word>& v) {
  std::ostringstream out;
  out << "command: wp\n";
  echoPresentation(out, p);
  DehnSolver solver(p);
  bool result;
  if (v) {
    out << "mode: are-equal\n";
    out << "word: " << printWord(u, p.names) << "\n";
    out << "other: " << printWord(*v, p.names) << "\n";
    result = solver.areEqual(u, *v);
  } else {
    out << "mode: is-trivial\n";
    out << "word: " << printWord(u, p.names) << "\n";
    result = solver.isTrivial(u);
  }
  out << "result: " << boolName(result) << "\n";
  out << "normal-form: " << printWord(solver.normalize(v ? u.concat(v->inverse()) : u), p.names)
      << "\n";
  return {out.str(), !result};
}

ReportResult reportMinimize(int rank, const Word& w,
                            const std::vector<std::string>& names, int whiteheadCap) {
  std::ostringstream out;
  out << "command: minimize\n";
  out << "rank: " << rank << "\n";
  out << "word: " << printWord(w, names) << "\n";
  out << "whitehead-cap: " << whiteheadCap << "\n";
  MinimalForm m = minimize(w, rank, whiteheadCap);
  out << "minimal: " << printWord(m.word.representative(), names) << "\n";
  out << "minimal-length: " << m.word.size() << "\n";
  out << "moves: " << m.witnessChain.size() << "\n";
  for (std::size_t i = 0; i < m.witnessChain.size(); ++i) {
    out << "move." << i + 1 << ": " << m.witnessChain[i].describe(names) << "\n";
  }
  return {out.str(), false};
}

ReportResult reportPrimitive(int rank, const Word& w,
                             const std::vector<std::string>& names, int whiteheadCap) {
  std::ostringstream out;
  out << "command: primitive\n";
  out << "rank: " << rank << "\n";
  out << "word: " << printWord(w, names) << "\n";
  out << "whitehead-cap: " << whiteheadCap << "\n";
  bool prim = isPrimitive(w, rank, whiteheadCap);
  out << "primitive: " << boolName(prim) << "\n";
  return {out.str(), !prim};
}

ReportResult reportOrder(const OneRelatorPresentation& p, const Word& w, int bound,
                         int quotientDegreeCap) {
  std::ostringstream out;
  out << "command: order\n";
  echoPresentation(out, p);
  out << "word: " << printWord(w, p.names) << "\n";
  out << "bound: " << bound << "\n";
  out << "quotient-degree-cap: " << quotientDegreeCap << "\n";
  OrderVerdict v = torsionOrder(p, w, bound, quotientDegreeCap);
  out << "status: " << statusName(v.status) << "\n";
  if (v.status == Status::ProvenTrue) {
    out << "order: " << v.order << "\n";
    for (const OrderExclusion& ex : v.lowerBound.exclusions) {
      out << "exclude." << ex.excludedPower << ": "
          << (ex.byAbelianization ? "abelianization" : "quotient") << "\n";
    }
  } else {
    out << "bound-searched: " << v.boundSearched << "\n";
  }
  return {out.str(), v.status == Status::ProvenFalse};
}

ReportResult reportQuotients(const Presentation& p, const std::optional<Word>& w,
                             int maxDegree, int quotientDegreeCap) {
  std::ostringstream out;
  out << "command: quotients\n";
  out << "rank: " << p.rank << "\n";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    out << "relator." << i << ": " << printWord(p.relators[i], p.names) << "\n";
  }
  out << "max-degree: " << maxDegree << "\n";
  out << "quotient-degree-cap: " << quotientDegreeCap << "\n";
  if (w) {
    out << "word: " << printWord(*w, p.names) << "\n";
    NontrivialityVerdict v = certifyNontrivial(p, *w, maxDegree, quotientDegreeCap);
    out << "status: " << statusName(v.status) << "\n";
    out << "max-degree-searched: " << v.maxDegreeSearched << "\n";
    if (v.witness) echoHom(out, "witness", *v.witness);
    return {out.str(), v.status != Status::ProvenTrue};
  }
  for (int d = 2; d <= maxDegree; ++d) {
    out << "homs.S" << d << ": " << enumerateHoms(p, d, quotientDegreeCap).size() << "\n";
  }
  return {out.str(), false};
}

ReportResult reportMalnormal(const OneRelatorPresentation& p, const Word& x,
                             const SearchBounds& bounds) {
  std::ostringstream out;
  out << "command: malnormal\n";
  echoPresentation(out, p);
  out << "element: " << printWord(x, p.names) << "\n";
  out << "max-witness-length: " << bounds.maxWitnessLength << "\n";
  out << "max-power: " << bounds.maxPower << "\n";
  out << "max-coset-power: " << bounds.maxCosetPower << "\n";
  MalnormalityVerdict v = malnormalWitnessSearch(p, x, bounds);
  // ProvenTrue here proves the *failure* of malnormality for <x>.
  out << "witness-found: " << boolName(v.status == Status::ProvenTrue) << "\n";
  out << "candidates-tried: " << v.candidatesTried << "\n";
  if (v.witness) {
    out << "witness.y: " << printWord(v.witness->y, p.names) << "\n";
    out << "witness.i: " << v.witness->i << "\n";
    out << "witness.j: " << v.witness->j << "\n";
    out << "witness.coset-bound: " << v.witness->cosetExclusionBound << "\n";
  }
  return {out.str(), false};
}

ReportResult reportTMember(const OneRelatorPresentation& p, const Word& w,
                           const SearchBounds& bounds, int maxQuotientDegree) {
  std::ostringstream out;
  out << "command: tmember\n";
  echoPresentation(out, p);
  out << "word: " << printWord(w, p.names) << "\n";
  out << "max-conjugator-length: " << bounds.maxWitnessLength << "\n";
  out << "max-factors: " << bounds.maxPower << "\n";
  out << "max-quotient-degree: " << maxQuotientDegree << "\n";
  TMembershipVerdict v = tMembership(p, w, bounds, maxQuotientDegree);
  out << "status: " << statusName(v.status) << "\n";
  if (v.abelianObstruction) out << "obstruction: abelianization\n";
  if (v.quotientWitness) echoHom(out, "obstruction.quotient", *v.quotientWitness);
  for (std::size_t i = 0; i < v.productCertificate.size(); ++i) {
    const ConjugateFactor& f = v.productCertificate[i];
    out << "factor." << i + 1 << ": sign=" << f.sign
        << " conjugator=" << printWord(f.conjugator, p.names) << "\n";
  }
  return {out.str(), v.status == Status::ProvenFalse};
}

ReportResult reportGogValidate(const GraphOfGroups& g, int quotientDegreeCap) {
  std::ostringstream out;
  out << "command: gog validate\n";
  out << "vertices: " << g.vertices.size() << "\n";
  out << "edges: " << g.edges.size() << "\n";
  out << "jsj-candidate: " << boolName(g.jsjCandidate) << "\n";
  out << "quotient-degree-cap: " << quotientDegreeCap << "\n";
  GogValidation v = validateGraph(g, quotientDegreeCap);
  out << "status: " << statusName(v.status) << "\n";
  out << "violations: " << v.violations.size() << "\n";
  for (const std::string& s : v.violations) out << "violation: " << s << "\n";
  for (const std::string& s : v.warnings) out << "warning: " << s << "\n";
  return {out.str(), !v.violations.empty()};
}

ReportResult reportGogPi1(const GraphOfGroups& g) {
  std::ostringstream out;
  out << "command: gog pi1\n";
  Presentation p = fundamentalGroup(g);
  out << "presentation:\n" << printPresentation(p);
  return {out.str(), false};
}

ReportResult reportGogVerify(const GraphOfGroups& g, const Presentation& target,
                             const TietzeCertificate& cert) {
  std::ostringstream out;
  out << "command: gog verify\n";
  Presentation p = fundamentalGroup(g);
  out << "fundamental-group:\n" << printPresentation(p);
  out << "target:\n" << printPresentation(target);
  out << "moves: " << cert.moves.size() << "\n";
  bool ok = verifyIsomorphic(p, target, cert);
  out << "verified: " << boolName(ok) << "\n";
  return {out.str(), !ok};
}

ReportResult reportHarnessEnds(int rank, int maxRootLength, int exponent) {
  EndsHarnessReport r = endsLemmaHarness(rank, maxRootLength, exponent);
  return {formatHarnessReport(r), !r.violations.empty()};
}

}  // namespace orelt
