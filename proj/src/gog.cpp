#include "orelt/gog.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "orelt/dehn.hpp"
#include "orelt/quotients.hpp"

namespace orelt {

const char* vertexTagName(VertexTag t) {
  switch (t) {
    case VertexTag::ElementaryCyclic: return "cyclic";
    case VertexTag::ElementaryDihedral: return "dihedral";
    case VertexTag::Rigid: return "rigid";
  }
  return "?";
}

const char* edgeKindName(EdgeKind k) {
  return k == EdgeKind::InfiniteCyclic ? "cyclic" : "dihedral";
}

namespace {

void checkWellFormed(const GraphOfGroups& g) {
  int nv = static_cast<int>(g.vertices.size());
  if (nv == 0) throw std::invalid_argument("graph of groups has no vertices");
  for (const GogEdge& e : g.edges) {
    if (e.u < 0 || e.u >= nv || e.v < 0 || e.v >= nv) {
      throw std::invalid_argument("edge " + e.id + " has a dangling endpoint");
    }
  }
}

// Union-find over vertex indices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Order-two check for a dihedral edge image inside a vertex group, when a
// Dehn solver exists for that vertex presentation.
enum class OrderTwo { Yes, No, Unknown };

OrderTwo imageHasOrderTwo(const Presentation& vertexGroup, const Word& image) {
  if (vertexGroup.relators.size() != 1) return OrderTwo::Unknown;
  OneRelatorPresentation p;
  try {
    p = OneRelatorPresentation::make(vertexGroup.rank, vertexGroup.relators[0],
                                     vertexGroup.names);
  } catch (const std::exception&) {
    return OrderTwo::Unknown;
  }
  if (!p.hasTorsion()) return OrderTwo::Unknown;
  DehnSolver solver(p);
  if (solver.isTrivial(image)) return OrderTwo::No;  // trivial, not order 2
  return solver.isTrivial(image.pow(2)) ? OrderTwo::Yes : OrderTwo::No;
}

}  // namespace

GogValidation validateGraph(const GraphOfGroups& g, int quotientDegreeCap) {
  checkWellFormed(g);
  GogValidation out;
  auto violation = [&](const std::string& msg) { out.violations.push_back(msg); };
  auto warning = [&](const std::string& msg) { out.warnings.push_back(msg); };

  int nv = static_cast<int>(g.vertices.size());

  // Connectivity of the whole graph.
  Dsu all(nv);
  for (const GogEdge& e : g.edges) all.unite(e.u, e.v);
  for (int i = 1; i < nv; ++i) {
    if (all.find(i) != all.find(0)) {
      violation("graph is not connected");
      break;
    }
  }

  // Spanning tree: exactly nv-1 tree edges, acyclic, spanning.
  Dsu tree(nv);
  int treeEdges = 0;
  bool treeCycle = false;
  for (const GogEdge& e : g.edges) {
    if (!e.inTree) continue;
    ++treeEdges;
    if (!tree.unite(e.u, e.v)) treeCycle = true;
  }
  if (treeCycle) violation("tree edges contain a cycle");
  if (treeEdges != nv - 1) {
    violation("tree edge count " + std::to_string(treeEdges) + " differs from " +
              std::to_string(nv - 1));
  } else if (!treeCycle) {
    for (int i = 1; i < nv; ++i) {
      if (tree.find(i) != tree.find(0)) {
        violation("tree edges do not span the graph");
        break;
      }
    }
  }

  for (const GogEdge& e : g.edges) {
    std::size_t arity = e.kind == EdgeKind::InfiniteCyclic ? 1 : 2;
    if (e.imagesU.size() != arity || e.imagesV.size() != arity) {
      violation("edge " + e.id + " carries " + std::to_string(e.imagesU.size()) + "/" +
                std::to_string(e.imagesV.size()) + " images, expected " +
                std::to_string(arity));
      continue;
    }
    for (int side = 0; side < 2; ++side) {
      int vid = side == 0 ? e.u : e.v;
      const auto& images = side == 0 ? e.imagesU : e.imagesV;
      const GogVertex& vertex = g.vertices[vid];
      for (const Word& image : images) {
        if (image.maxGenerator() > vertex.group.rank) {
          violation("edge " + e.id + " image uses a generator beyond vertex " +
                    vertex.id);
          continue;
        }
        if (image.cyclicReduce().empty()) {
          violation("edge " + e.id + " image at vertex " + vertex.id +
                    " is freely trivial");
          continue;
        }
        NontrivialityVerdict nt =
            certifyNontrivial(vertex.group, image, quotientDegreeCap);
        if (nt.status != Status::ProvenTrue) {
          warning("edge " + e.id + " image nontriviality in vertex " + vertex.id +
                  " is unverified up to degree " + std::to_string(quotientDegreeCap));
        }
      }
      if (e.kind == EdgeKind::InfiniteDihedral) {
        for (const Word& image : images) {
          switch (imageHasOrderTwo(vertex.group, image)) {
            case OrderTwo::Yes:
              break;
            case OrderTwo::No:
              violation("edge " + e.id + " dihedral image at vertex " + vertex.id +
                        " does not have order two");
              break;
            case OrderTwo::Unknown:
              warning("edge " + e.id + " dihedral image order at vertex " + vertex.id +
                      " is undecided");
              break;
          }
        }
      }
    }
  }

  if (g.jsjCandidate) {
    std::vector<int> degree(nv, 0);
    for (const GogEdge& e : g.edges) {
      ++degree[e.u];
      ++degree[e.v];
      bool uElem = g.vertices[e.u].tag != VertexTag::Rigid;
      bool vElem = g.vertices[e.v].tag != VertexTag::Rigid;
      if (uElem == vElem) {
        violation("edge " + e.id + " does not join an elementary vertex to a rigid one");
      }
    }
    for (int i = 0; i < nv; ++i) {
      if (g.vertices[i].tag != VertexTag::ElementaryDihedral) continue;
      if (degree[i] != 1) {
        violation("dihedral vertex " + g.vertices[i].id + " has degree " +
                  std::to_string(degree[i]) + ", expected one");
        continue;
      }
      for (const GogEdge& e : g.edges) {
        if ((e.u == i || e.v == i) && e.kind != EdgeKind::InfiniteDihedral) {
          violation("dihedral vertex " + g.vertices[i].id +
                    " has a non-dihedral incident edge " + e.id);
        }
      }
    }
  }

  out.status = out.violations.empty() ? Status::ProvenTrue : Status::ProvenFalse;
  return out;
}

namespace {

Word substitute(const Word& w, int gen, const Word& replacement, int newRank) {
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    if (generatorOf(l) == gen) {
      Word rep = l > 0 ? replacement : replacement.inverse();
      raw.insert(raw.end(), rep.letters().begin(), rep.letters().end());
    } else {
      raw.push_back(l);
    }
  }
  return Word::reduce(raw, newRank);
}

Word dropGenerator(const Word& w, int gen) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    int g = generatorOf(l);
    if (g == gen) throw std::logic_error("dropGenerator: generator still present");
    int shifted = g > gen ? g - 1 : g;
    out.push_back(l > 0 ? shifted : -shifted);
  }
  return Word::fromReduced(std::move(out));
}

// Mutable presentation state used during tree collapsing.
struct Builder {
  int rank = 0;
  std::vector<std::string> names;
  std::vector<Word> relators;

  // Eliminates generator `gen` by substituting `value` for it everywhere
  // and renumbering. `extra` words are rewritten in place as well.
  void eliminate(int gen, const Word& value, std::vector<Word*>& extra) {
    for (Word& r : relators) r = dropGenerator(substitute(r, gen, value, rank), gen);
    for (Word* w : extra) *w = dropGenerator(substitute(*w, gen, value, rank), gen);
    names.erase(names.begin() + (gen - 1));
    --rank;
  }
};

}  // namespace

Presentation fundamentalGroup(const GraphOfGroups& g) {
  checkWellFormed(g);
  int nv = static_cast<int>(g.vertices.size());

  // Tree must be a spanning tree for the construction to make sense.
  {
    Dsu tree(nv);
    int treeEdges = 0;
    for (const GogEdge& e : g.edges) {
      if (!e.inTree) continue;
      ++treeEdges;
      if (!tree.unite(e.u, e.v)) {
        throw std::invalid_argument("tree edges contain a cycle");
      }
    }
    if (treeEdges != nv - 1) throw std::invalid_argument("tree edges do not form a spanning tree");
    for (int i = 1; i < nv; ++i) {
      if (tree.find(i) != tree.find(0)) {
        throw std::invalid_argument("tree edges do not span the graph");
      }
    }
  }

  Builder builder;
  std::vector<int> offset(nv, 0);
  std::set<std::string> used;
  auto uniqueName = [&](std::string base, const std::string& scope) {
    if (used.count(base)) base += "." + scope;
    while (used.count(base)) base += "'";
    used.insert(base);
    return base;
  };

  for (int i = 0; i < nv; ++i) {
    offset[i] = builder.rank;
    const GogVertex& vertex = g.vertices[i];
    for (int gLocal = 1; gLocal <= vertex.group.rank; ++gLocal) {
      builder.names.push_back(uniqueName(vertex.group.names[gLocal - 1], vertex.id));
    }
    builder.rank += vertex.group.rank;
  }

  auto shiftWord = [&](const Word& w, int vertexIndex) {
    std::vector<Letter> out;
    for (Letter l : w.letters()) {
      int global = generatorOf(l) + offset[vertexIndex];
      out.push_back(l > 0 ? global : -global);
    }
    return Word::fromReduced(std::move(out));
  };

  for (int i = 0; i < nv; ++i) {
    for (const Word& r : g.vertices[i].group.relators) {
      builder.relators.push_back(shiftWord(r, i));
    }
  }

  // Identification pairs for tree edges, and stable-letter payloads for the
  // rest, all in global letters so eliminations can rewrite them.
  struct Identification {
    Word atU, atV;
  };
  struct StableRelator {
    int edgeIndex;
    Word atU, atV;
  };
  std::map<int, std::vector<Identification>> treeIds;
  std::vector<StableRelator> stable;
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const GogEdge& e = g.edges[ei];
    for (std::size_t k = 0; k < e.imagesU.size(); ++k) {
      Word atU = shiftWord(e.imagesU[k], e.u);
      Word atV = shiftWord(e.imagesV[k], e.v);
      if (e.inTree) {
        treeIds[static_cast<int>(ei)].push_back({atU, atV});
      } else {
        stable.push_back({static_cast<int>(ei), atU, atV});
      }
    }
  }

  // BFS over tree edges from vertex 0; edge order within a vertex follows
  // the edge list.
  std::vector<int> bfsOrder;
  {
    std::vector<bool> seen(nv, false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
      int at = queue.front();
      queue.pop();
      for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        const GogEdge& e = g.edges[ei];
        if (!e.inTree) continue;
        int other = -1;
        if (e.u == at && !seen[e.v]) other = e.v;
        if (e.v == at && !seen[e.u]) other = e.u;
        if (other < 0) continue;
        seen[other] = true;
        bfsOrder.push_back(static_cast<int>(ei));
        queue.push(other);
      }
    }
  }

  auto gatherExtra = [&](std::vector<Word*>& extra) {
    extra.clear();
    for (auto& [_, ids] : treeIds) {
      for (Identification& id : ids) {
        extra.push_back(&id.atU);
        extra.push_back(&id.atV);
      }
    }
    for (StableRelator& s : stable) {
      extra.push_back(&s.atU);
      extra.push_back(&s.atV);
    }
  };

  for (int ei : bfsOrder) {
    const GogEdge& edge = g.edges[ei];
    for (Identification& id : treeIds[ei]) {
      Word atU = id.atU, atV = id.atV;
      bool collapse = edge.kind == EdgeKind::InfiniteCyclic;
      // Parent side is the BFS-discovered side; the child side image is
      // preferred for elimination.
      auto singleLetter = [](const Word& w) -> std::optional<Letter> {
        if (w.size() == 1) return w.at(0);
        return std::nullopt;
      };
      std::vector<Word*> extra;
      if (collapse && singleLetter(atV)) {
        Letter l = *singleLetter(atV);
        Word value = l > 0 ? atU : atU.inverse();
        if (value.support().count(generatorOf(l)) == 0) {
          gatherExtra(extra);
          builder.eliminate(generatorOf(l), value, extra);
          continue;
        }
      }
      if (collapse && singleLetter(atU)) {
        Letter l = *singleLetter(atU);
        Word value = l > 0 ? atV : atV.inverse();
        if (value.support().count(generatorOf(l)) == 0) {
          gatherExtra(extra);
          builder.eliminate(generatorOf(l), value, extra);
          continue;
        }
      }
      builder.relators.push_back(atU.concat(atV.inverse()));
    }
  }

  // Stable letters for non-tree edges.
  std::map<int, int> stableLetterOf;
  for (const StableRelator& s : stable) {
    if (!stableLetterOf.count(s.edgeIndex)) {
      builder.names.push_back(uniqueName(g.edges[s.edgeIndex].id, "s"));
      ++builder.rank;
      stableLetterOf[s.edgeIndex] = builder.rank;
    }
  }
  for (const StableRelator& s : stable) {
    int letter = stableLetterOf[s.edgeIndex];
    Word rel = Word::single(-letter)
                   .concat(s.atU)
                   .concat(Word::single(letter))
                   .concat(s.atV.inverse());
    builder.relators.push_back(rel);
  }

  return Presentation::make(builder.rank, builder.relators, builder.names);
}

namespace {

Word substituteAndReduce(const Word& w, int gen, const Word& value, int rank) {
  return substitute(w, gen, value, rank);
}

Presentation applyMove(const Presentation& p, const TietzeMove& move,
                       std::size_t moveIndex) {
  auto fail = [&](const std::string& msg) -> void { throw TietzeError(moveIndex, msg); };
  Presentation out = p;
  auto checkRelator = [&](int idx) {
    if (idx < 0 || idx >= static_cast<int>(out.relators.size())) {
      fail("relator index " + std::to_string(idx) + " out of range");
    }
  };
  switch (move.kind) {
    case TietzeMove::Kind::AddGenerator: {
      if (move.word.maxGenerator() > p.rank) fail("defining word uses unknown generators");
      ++out.rank;
      out.names.push_back(move.name.empty() ? "g" + std::to_string(out.rank) : move.name);
      out.relators.push_back(Word::single(out.rank).concat(move.word.inverse()));
      break;
    }
    case TietzeMove::Kind::RemoveGenerator: {
      checkRelator(move.relator);
      if (move.gen < 1 || move.gen > p.rank) fail("generator index out of range");
      Word r = out.relators[move.relator];
      int occurrences = 0;
      std::size_t where = 0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (generatorOf(r.at(i)) == move.gen) {
          ++occurrences;
          where = i;
        }
      }
      if (occurrences != 1) {
        fail("relator must contain the generator exactly once (found " +
             std::to_string(occurrences) + ")");
      }
      Word rotated = r.rotated(where);
      if (rotated.at(0) < 0) rotated = rotated.inverse().rotated(rotated.size() - 1);
      // rotated = g * u, so g = u^{-1}.
      if (generatorOf(rotated.at(0)) != move.gen || rotated.at(0) < 0) {
        fail("internal: rotation did not expose the generator");
      }
      Word u = Word::fromReduced(std::vector<Letter>(rotated.letters().begin() + 1,
                                                     rotated.letters().end()));
      Word value = u.inverse();
      out.relators.erase(out.relators.begin() + move.relator);
      for (Word& rel : out.relators) {
        rel = dropGenerator(substituteAndReduce(rel, move.gen, value, out.rank), move.gen);
      }
      out.names.erase(out.names.begin() + (move.gen - 1));
      --out.rank;
      break;
    }
    case TietzeMove::Kind::ReplaceRelatorByProduct: {
      checkRelator(move.relator);
      checkRelator(move.other);
      if (move.relator == move.other) fail("target and other relator coincide");
      if (move.word.maxGenerator() > p.rank) fail("conjugator uses unknown generators");
      Word conjugated = move.word.concat(move.sign >= 0 ? out.relators[move.other]
                                                        : out.relators[move.other].inverse())
                            .concat(move.word.inverse());
      out.relators[move.relator] = out.relators[move.relator].concat(conjugated);
      break;
    }
    case TietzeMove::Kind::CyclicShiftRelator: {
      checkRelator(move.relator);
      const Word& r = out.relators[move.relator];
      if (!r.empty()) {
        std::size_t k = ((move.shift % static_cast<int>(r.size())) + r.size()) % r.size();
        out.relators[move.relator] = r.rotated(k);
      }
      break;
    }
    case TietzeMove::Kind::InvertRelator: {
      checkRelator(move.relator);
      out.relators[move.relator] = out.relators[move.relator].inverse();
      break;
    }
    case TietzeMove::Kind::RenameGenerators: {
      if (static_cast<int>(move.perm.size()) != p.rank) fail("permutation size mismatch");
      std::vector<bool> hit(p.rank, false);
      for (int target : move.perm) {
        if (target < 1 || target > p.rank || hit[target - 1]) fail("not a permutation");
        hit[target - 1] = true;
      }
      for (Word& r : out.relators) {
        std::vector<Letter> mapped;
        for (Letter l : r.letters()) {
          int target = move.perm[generatorOf(l) - 1];
          mapped.push_back(l > 0 ? target : -target);
        }
        r = Word::fromReduced(std::move(mapped));
      }
      if (!move.newNames.empty()) {
        if (static_cast<int>(move.newNames.size()) != p.rank) fail("name list size mismatch");
        out.names = move.newNames;
      }
      break;
    }
    case TietzeMove::Kind::InvertGenerator: {
      if (move.gen < 1 || move.gen > p.rank) fail("generator index out of range");
      for (Word& r : out.relators) {
        std::vector<Letter> mapped;
        for (Letter l : r.letters()) {
          mapped.push_back(generatorOf(l) == move.gen ? -l : l);
        }
        r = Word::fromReduced(std::move(mapped));
      }
      break;
    }
  }
  return out;
}

}  // namespace

CertificateReplay applyCertificate(const Presentation& p, const TietzeCertificate& cert) {
  CertificateReplay replay;
  replay.intermediates.push_back(p);
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    replay.intermediates.push_back(applyMove(replay.intermediates.back(), cert.moves[i], i));
  }
  return replay;
}

namespace {

std::multiset<CyclicWord> relatorFingerprint(const Presentation& p) {
  std::multiset<CyclicWord> out;
  for (const Word& r : p.relators) {
    CyclicWord c = CyclicWord::of(r);
    CyclicWord ci = c.inverse();
    out.insert(ci < c ? ci : c);
  }
  return out;
}

}  // namespace

bool verifyIsomorphic(const Presentation& p1, const Presentation& p2,
                      const TietzeCertificate& cert) {
  try {
    CertificateReplay replay = applyCertificate(p1, cert);
    const Presentation& result = replay.result();
    if (result.rank != p2.rank) return false;
    return relatorFingerprint(result) == relatorFingerprint(p2);
  } catch (const TietzeError&) {
    return false;
  }
}

}  // namespace orelt
