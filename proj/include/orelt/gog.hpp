#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orelt/presentation.hpp"
#include "orelt/verdict.hpp"
#include "orelt/words.hpp"

namespace orelt {

enum class VertexTag { ElementaryCyclic, ElementaryDihedral, Rigid };
enum class EdgeKind { InfiniteCyclic, InfiniteDihedral };

const char* vertexTagName(VertexTag t);
const char* edgeKindName(EdgeKind k);

struct GogVertex {
  std::string id;
  Presentation group;
  VertexTag tag = VertexTag::Rigid;
};

// An edge with its edge-group generator images at both endpoints: one image
// per endpoint for infinite-cyclic edge groups, two (each of order two) for
// infinite-dihedral ones.
struct GogEdge {
  std::string id;
  int u = 0;
  int v = 0;
  EdgeKind kind = EdgeKind::InfiniteCyclic;
  std::vector<Word> imagesU;
  std::vector<Word> imagesV;
  bool inTree = false;
};

struct GraphOfGroups {
  std::vector<GogVertex> vertices;
  std::vector<GogEdge> edges;
  bool jsjCandidate = true;
};

struct GogValidation {
  Status status = Status::Unknown;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

// Structural checks (connectivity, spanning tree, image arity and
// nontriviality) plus the JSJ shape rules when the graph is declared a JSJ
// candidate: dihedral elementary vertices have degree one with a dihedral
// incident edge, and every edge joins an elementary vertex to a rigid one.
// Throws std::invalid_argument on malformed graphs (dangling endpoints).
GogValidation validateGraph(const GraphOfGroups& g, int quotientDegreeCap = 4);

// Fundamental group: vertex generators plus one stable letter per non-tree
// edge. Tree-edge identifications with a single-letter side are collapsed
// by eliminating that generator, processing tree edges in BFS order from
// vertex 0; all remaining identifications become relators.
Presentation fundamentalGroup(const GraphOfGroups& g);

struct TietzeMove {
  enum class Kind {
    AddGenerator,
    RemoveGenerator,
    ReplaceRelatorByProduct,
    CyclicShiftRelator,
    InvertRelator,
    RenameGenerators,
    InvertGenerator,
  };
  Kind kind = Kind::InvertRelator;

  std::string name;             // AddGenerator: name of the new generator
  Word word;                    // defining word / conjugator
  int gen = 0;                  // 1-based generator index
  int relator = 0;              // 0-based target relator index
  int other = 0;                // 0-based other relator index
  int sign = 1;                 // +-1
  int shift = 0;                // rotation amount
  std::vector<int> perm;        // perm[g-1] = new index of generator g
  std::vector<std::string> newNames;  // optional renaming
};

struct TietzeCertificate {
  std::vector<TietzeMove> moves;
};

class TietzeError : public std::runtime_error {
 public:
  TietzeError(std::size_t moveIndex, const std::string& what)
      : std::runtime_error("move " + std::to_string(moveIndex) + ": " + what),
        moveIndex_(moveIndex) {}
  std::size_t moveIndex() const { return moveIndex_; }

 private:
  std::size_t moveIndex_;
};

struct CertificateReplay {
  // intermediates[0] is the input, intermediates.back() the result.
  std::vector<Presentation> intermediates;
  const Presentation& result() const { return intermediates.back(); }
};

CertificateReplay applyCertificate(const Presentation& p, const TietzeCertificate& cert);

// True iff replaying the certificate on p1 yields a presentation with the
// same generator count as p2 and the same multiset of relator cyclic
// normal forms up to inversion. Returns false instead of throwing on a
// failed move precondition.
bool verifyIsomorphic(const Presentation& p1, const Presentation& p2,
                      const TietzeCertificate& cert);

}  // namespace orelt
