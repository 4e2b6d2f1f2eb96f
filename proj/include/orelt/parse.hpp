#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "orelt/gog.hpp"
#include "orelt/presentation.hpp"
#include "orelt/words.hpp"

namespace orelt {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Word grammar: sequence of factors, each `name`, `name^k`, or a
// parenthesized word with an optional integer exponent; k nonzero.
Word parseWord(const std::string& text, const std::vector<std::string>& names,
               int line = 1);

// Presentation text: a `gens:` line with unique names, then zero or more
// `rel:` lines. `#` starts a comment.
Presentation parsePresentation(const std::string& text);

std::string printWord(const Word& w, const std::vector<std::string>& names);
std::string printPresentation(const Presentation& p);

// Sectioned graph format: optional `graph jsj=<bool>` header, then
// `vertex <id> tag=<cyclic|dihedral|rigid>` blocks with inline
// presentations and `edge <id> u=<vid> v=<vid> kind=<cyclic|dihedral>
// tree=<bool>` blocks with `image.u = <word>` / `image.v = <word>` lines.
GraphOfGroups parseGraphOfGroups(const std::string& text);

std::string printGraphOfGroups(const GraphOfGroups& g);

// Certificate lines, applied to an evolving presentation whose initial
// generator names come from `start`:
//   add <name> = <word>
//   remove <name> via <relator-index>
//   product <target> <other> <sign> <conjugator-word or 1>
//   shift <relator-index> <amount>
//   invertrel <relator-index>
//   rename <old>=<new> ...
//   invertgen <name>
// Indices are 0-based over the relator list at that step.
TietzeCertificate parseCertificate(const std::string& text, const Presentation& start);

}  // namespace orelt
