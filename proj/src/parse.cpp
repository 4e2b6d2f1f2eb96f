#include "orelt/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace orelt {

namespace {

bool isNameStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

struct WordScanner {
  const std::string& text;
  const std::vector<std::string>& names;
  int line;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line, static_cast<int>(pos) + 1, what);
  }

  void skipSpace() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool atEnd() {
    skipSpace();
    return pos >= text.size();
  }

  int lookupName() {
    std::size_t start = pos;
    while (pos < text.size() && isNameChar(text[pos])) ++pos;
    std::string name = text.substr(start, pos - start);
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<int>(i) + 1;
    }
    pos = start;
    fail("unknown generator '" + name + "'");
  }

  int parseExponent() {
    ++pos;  // consume '^'
    skipSpace();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer exponent after '^'");
    int value = std::stoi(text.substr(start, pos - start));
    if (value == 0) {
      pos = start;
      fail("zero exponent makes the word empty");
    }
    return value;
  }

  void emit(std::vector<Letter>& out, const std::vector<Letter>& unit, int exponent) {
    std::vector<Letter> block = unit;
    if (exponent < 0) {
      std::reverse(block.begin(), block.end());
      for (Letter& l : block) l = -l;
    }
    for (int k = 0; k < std::abs(exponent); ++k) {
      out.insert(out.end(), block.begin(), block.end());
    }
  }

  // factor := name [^int] | '(' word ')' [^int]
  void parseFactor(std::vector<Letter>& out) {
    if (text[pos] == '(') {
      ++pos;
      std::vector<Letter> inner = parseSequence(true);
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      skipSpace();
      int e = (pos < text.size() && text[pos] == '^') ? parseExponent() : 1;
      emit(out, inner, e);
      return;
    }
    if (text[pos] == '1' &&
        (pos + 1 >= text.size() || !isNameChar(text[pos + 1]))) {
      ++pos;  // the literal identity word
      return;
    }
    if (!isNameStart(text[pos])) fail("expected generator name or '('");
    int gen = lookupName();
    skipSpace();
    int e = (pos < text.size() && text[pos] == '^') ? parseExponent() : 1;
    emit(out, {gen}, e);
  }

  std::vector<Letter> parseSequence(bool insideParens) {
    std::vector<Letter> out;
    for (;;) {
      skipSpace();
      if (pos >= text.size()) break;
      if (text[pos] == ')') {
        if (insideParens) break;
        fail("unmatched ')'");
      }
      parseFactor(out);
    }
    return out;
  }
};

// Strips a trailing comment and surrounding whitespace.
std::string cleanLine(const std::string& raw) {
  std::string s = raw;
  std::size_t hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::pair<int, std::string>> nonBlankLines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string raw;
  int lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string s = cleanLine(raw);
    if (!s.empty()) out.emplace_back(lineNo, s);
  }
  return out;
}

bool startsWith(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::vector<std::string> splitWhitespace(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> parseGeneratorNames(const std::string& rest, int lineNo) {
  std::vector<std::string> names = splitWhitespace(rest);
  if (names.empty()) throw ParseError(lineNo, 1, "empty generator list");
  for (const std::string& n : names) {
    if (!isNameStart(n[0]) ||
        !std::all_of(n.begin(), n.end(), [](char c) { return isNameChar(c); })) {
      throw ParseError(lineNo, 1, "invalid generator name '" + n + "'");
    }
    if (std::count(names.begin(), names.end(), n) != 1) {
      throw ParseError(lineNo, 1, "duplicate generator name '" + n + "'");
    }
  }
  return names;
}

// key=value fields on a directive line after the positional tokens.
std::map<std::string, std::string> keyValues(const std::vector<std::string>& toks,
                                             std::size_t from, int lineNo) {
  std::map<std::string, std::string> out;
  for (std::size_t i = from; i < toks.size(); ++i) {
    std::size_t eq = toks[i].find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= toks[i].size()) {
      throw ParseError(lineNo, 1, "expected key=value, got '" + toks[i] + "'");
    }
    out[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
  }
  return out;
}

bool parseBool(const std::string& s, int lineNo) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError(lineNo, 1, "expected boolean, got '" + s + "'");
}

}  // namespace

Word parseWord(const std::string& text, const std::vector<std::string>& names, int line) {
  WordScanner scanner{text, names, line};
  std::vector<Letter> raw = scanner.parseSequence(false);
  return Word::reduce(raw, static_cast<int>(names.size()));
}

Presentation parsePresentation(const std::string& text) {
  std::vector<std::string> names;
  std::vector<Word> relators;
  bool sawGens = false;
  for (const auto& [lineNo, s] : nonBlankLines(text)) {
    if (startsWith(s, "gens:")) {
      if (sawGens) throw ParseError(lineNo, 1, "duplicate gens: line");
      names = parseGeneratorNames(s.substr(5), lineNo);
      sawGens = true;
    } else if (startsWith(s, "rel:")) {
      if (!sawGens) throw ParseError(lineNo, 1, "rel: before gens:");
      Word r = parseWord(s.substr(4), names, lineNo);
      if (r.empty()) throw ParseError(lineNo, 1, "empty relator");
      relators.push_back(r);
    } else {
      throw ParseError(lineNo, 1, "expected gens: or rel: line");
    }
  }
  if (!sawGens) throw ParseError(1, 1, "missing gens: line");
  return Presentation::make(static_cast<int>(names.size()), std::move(relators), names);
}

std::string printWord(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    Letter l = w.at(i);
    std::size_t j = i;
    while (j < w.size() && w.at(j) == l) ++j;
    int run = static_cast<int>(j - i);
    int e = l > 0 ? run : -run;
    if (!first) out << " ";
    out << names.at(generatorOf(l) - 1);
    if (e != 1) out << "^" << e;
    first = false;
    i = j;
  }
  return out.str();
}

std::string printPresentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const std::string& n : p.names) out << " " << n;
  out << "\n";
  for (const Word& r : p.relators) {
    auto [root, n] = rootAndExponent(r);
    if (n > 1 && r == root.representative().pow(n)) {
      out << "rel: (" << printWord(root.representative(), p.names) << ")^" << n << "\n";
    } else {
      out << "rel: " << printWord(r, p.names) << "\n";
    }
  }
  return out.str();
}

GraphOfGroups parseGraphOfGroups(const std::string& text) {
  GraphOfGroups g;
  std::map<std::string, int> vertexIndex;

  // Per-block accumulation; flushed when the next directive starts.
  struct VertexBlock {
    int lineNo;
    std::string id;
    std::string tag;
    std::string presText;
  };
  std::optional<VertexBlock> vblock;
  int currentEdge = -1;

  auto flushVertex = [&]() {
    if (!vblock) return;
    GogVertex v;
    v.id = vblock->id;
    if (vblock->tag == "cyclic") {
      v.tag = VertexTag::ElementaryCyclic;
    } else if (vblock->tag == "dihedral") {
      v.tag = VertexTag::ElementaryDihedral;
    } else if (vblock->tag == "rigid") {
      v.tag = VertexTag::Rigid;
    } else {
      throw ParseError(vblock->lineNo, 1, "unknown vertex tag '" + vblock->tag + "'");
    }
    v.group = parsePresentation(vblock->presText);
    if (vertexIndex.count(v.id)) {
      throw ParseError(vblock->lineNo, 1, "duplicate vertex id '" + v.id + "'");
    }
    vertexIndex[v.id] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(std::move(v));
    vblock.reset();
  };

  struct PendingEndpoint {
    std::string id;
    int lineNo;
  };
  std::vector<std::pair<PendingEndpoint, PendingEndpoint>> pendingEndpoints;

  for (const auto& [lineNo, s] : nonBlankLines(text)) {
    std::vector<std::string> toks = splitWhitespace(s);
    const std::string& head = toks[0];
    if (head == "graph") {
      flushVertex();
      auto kv = keyValues(toks, 1, lineNo);
      if (kv.count("jsj")) g.jsjCandidate = parseBool(kv["jsj"], lineNo);
    } else if (head == "vertex") {
      flushVertex();
      currentEdge = -1;
      if (toks.size() < 2) throw ParseError(lineNo, 1, "vertex needs an id");
      auto kv = keyValues(toks, 2, lineNo);
      if (!kv.count("tag")) throw ParseError(lineNo, 1, "vertex needs tag=");
      vblock = VertexBlock{lineNo, toks[1], kv["tag"], ""};
    } else if (head == "edge") {
      flushVertex();
      if (toks.size() < 2) throw ParseError(lineNo, 1, "edge needs an id");
      auto kv = keyValues(toks, 2, lineNo);
      for (const char* key : {"u", "v", "kind", "tree"}) {
        if (!kv.count(key)) {
          throw ParseError(lineNo, 1, std::string("edge needs ") + key + "=");
        }
      }
      GogEdge e;
      e.id = toks[1];
      if (kv["kind"] == "cyclic") {
        e.kind = EdgeKind::InfiniteCyclic;
      } else if (kv["kind"] == "dihedral") {
        e.kind = EdgeKind::InfiniteDihedral;
      } else {
        throw ParseError(lineNo, 1, "unknown edge kind '" + kv["kind"] + "'");
      }
      e.inTree = parseBool(kv["tree"], lineNo);
      currentEdge = static_cast<int>(g.edges.size());
      g.edges.push_back(std::move(e));
      pendingEndpoints.push_back({{kv["u"], lineNo}, {kv["v"], lineNo}});
    } else if (startsWith(s, "image.u") || startsWith(s, "image.v")) {
      if (currentEdge < 0) throw ParseError(lineNo, 1, "image line outside an edge block");
      std::size_t eq = s.find('=');
      if (eq == std::string::npos) throw ParseError(lineNo, 1, "image line needs '='");
      bool atU = s[6] == 'u';
      GogEdge& e = g.edges[currentEdge];
      const std::string& vid =
          atU ? pendingEndpoints[currentEdge].first.id : pendingEndpoints[currentEdge].second.id;
      auto it = vertexIndex.find(vid);
      if (it == vertexIndex.end()) {
        throw ParseError(lineNo, 1, "edge endpoint '" + vid + "' not declared before use");
      }
      Word w = parseWord(s.substr(eq + 1), g.vertices[it->second].group.names, lineNo);
      (atU ? e.imagesU : e.imagesV).push_back(w);
    } else if (vblock) {
      vblock->presText += s + "\n";
    } else {
      throw ParseError(lineNo, 1, "unexpected line '" + s + "'");
    }
  }
  flushVertex();

  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& [pu, pv] = pendingEndpoints[i];
    auto iu = vertexIndex.find(pu.id);
    auto iv = vertexIndex.find(pv.id);
    if (iu == vertexIndex.end()) {
      throw ParseError(pu.lineNo, 1, "unknown vertex id '" + pu.id + "'");
    }
    if (iv == vertexIndex.end()) {
      throw ParseError(pv.lineNo, 1, "unknown vertex id '" + pv.id + "'");
    }
    g.edges[i].u = iu->second;
    g.edges[i].v = iv->second;
  }
  return g;
}

std::string printGraphOfGroups(const GraphOfGroups& g) {
  std::ostringstream out;
  out << "graph jsj=" << (g.jsjCandidate ? "true" : "false") << "\n";
  for (const GogVertex& v : g.vertices) {
    const char* tag = v.tag == VertexTag::ElementaryCyclic    ? "cyclic"
                      : v.tag == VertexTag::ElementaryDihedral ? "dihedral"
                                                               : "rigid";
    out << "vertex " << v.id << " tag=" << tag << "\n";
    out << printPresentation(v.group);
  }
  for (const GogEdge& e : g.edges) {
    out << "edge " << e.id << " u=" << g.vertices[e.u].id << " v=" << g.vertices[e.v].id
        << " kind=" << (e.kind == EdgeKind::InfiniteCyclic ? "cyclic" : "dihedral")
        << " tree=" << (e.inTree ? "true" : "false") << "\n";
    for (const Word& w : e.imagesU) {
      out << "image.u = " << printWord(w, g.vertices[e.u].group.names) << "\n";
    }
    for (const Word& w : e.imagesV) {
      out << "image.v = " << printWord(w, g.vertices[e.v].group.names) << "\n";
    }
  }
  return out.str();
}

namespace {

int parseIndex(const std::string& tok, int lineNo, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(lineNo, 1, "expected nonnegative " + what + ", got '" + tok + "'");
  }
}

int resolveName(const std::vector<std::string>& names, const std::string& name,
                int lineNo) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i) + 1;
  }
  throw ParseError(lineNo, 1, "unknown generator '" + name + "'");
}

}  // namespace

TietzeCertificate parseCertificate(const std::string& text, const Presentation& start) {
  TietzeCertificate cert;
  std::vector<std::string> names = start.names;

  for (const auto& [lineNo, s] : nonBlankLines(text)) {
    std::vector<std::string> toks = splitWhitespace(s);
    const std::string& head = toks[0];
    TietzeMove move;
    if (head == "add") {
      // add <name> = <word>
      if (toks.size() < 3 || toks[2] != "=") {
        throw ParseError(lineNo, 1, "expected: add <name> = <word>");
      }
      move.kind = TietzeMove::Kind::AddGenerator;
      move.name = toks[1];
      move.word = parseWord(s.substr(s.find('=') + 1), names, lineNo);
      names.push_back(move.name);
    } else if (head == "remove") {
      // remove <name> via <relator-index>
      if (toks.size() != 4 || toks[2] != "via") {
        throw ParseError(lineNo, 1, "expected: remove <name> via <relator-index>");
      }
      move.kind = TietzeMove::Kind::RemoveGenerator;
      move.gen = resolveName(names, toks[1], lineNo);
      move.relator = parseIndex(toks[3], lineNo, "relator index");
      names.erase(names.begin() + (move.gen - 1));
    } else if (head == "product") {
      // product <target> <other> <sign> <conjugator-word or 1>
      if (toks.size() < 4) {
        throw ParseError(lineNo, 1, "expected: product <target> <other> <sign> <word>");
      }
      move.kind = TietzeMove::Kind::ReplaceRelatorByProduct;
      move.relator = parseIndex(toks[1], lineNo, "relator index");
      move.other = parseIndex(toks[2], lineNo, "relator index");
      if (toks[3] != "1" && toks[3] != "-1" && toks[3] != "+1") {
        throw ParseError(lineNo, 1, "sign must be 1 or -1");
      }
      move.sign = toks[3] == "-1" ? -1 : 1;
      std::string rest;
      for (std::size_t i = 4; i < toks.size(); ++i) rest += toks[i] + " ";
      if (rest.empty() || cleanLine(rest) == "1") {
        move.word = Word();
      } else {
        move.word = parseWord(rest, names, lineNo);
      }
    } else if (head == "shift") {
      if (toks.size() != 3) throw ParseError(lineNo, 1, "expected: shift <relator> <amount>");
      move.kind = TietzeMove::Kind::CyclicShiftRelator;
      move.relator = parseIndex(toks[1], lineNo, "relator index");
      move.shift = std::stoi(toks[2]);
    } else if (head == "invertrel") {
      if (toks.size() != 2) throw ParseError(lineNo, 1, "expected: invertrel <relator>");
      move.kind = TietzeMove::Kind::InvertRelator;
      move.relator = parseIndex(toks[1], lineNo, "relator index");
    } else if (head == "rename") {
      // rename <old>=<new> ...
      move.kind = TietzeMove::Kind::RenameGenerators;
      move.perm.resize(names.size());
      for (std::size_t g = 1; g <= names.size(); ++g) move.perm[g - 1] = static_cast<int>(g);
      move.newNames = names;
      auto kv = keyValues(toks, 1, lineNo);
      for (const auto& [oldName, newName] : kv) {
        int g = resolveName(names, oldName, lineNo);
        move.newNames[g - 1] = newName;
      }
      names = move.newNames;
    } else if (head == "invertgen") {
      if (toks.size() != 2) throw ParseError(lineNo, 1, "expected: invertgen <name>");
      move.kind = TietzeMove::Kind::InvertGenerator;
      move.gen = resolveName(names, toks[1], lineNo);
    } else {
      throw ParseError(lineNo, 1, "unknown certificate move '" + head + "'");
    }
    cert.moves.push_back(std::move(move));
  }
  return cert;
}

}  // namespace orelt
