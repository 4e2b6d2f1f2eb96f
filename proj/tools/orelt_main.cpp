// Command-line frontend; talks to the core only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orelt/orelt.h"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void die(int rc) {
  std::cerr << "error: " << orelt_last_error() << "\n";
  std::exit(kExitError);
  (void)rc;
}

struct PresHandle {
  orelt_presentation* p = nullptr;
  ~PresHandle() { orelt_presentation_free(p); }
};

struct GogHandle {
  orelt_gog* g = nullptr;
  ~GogHandle() { orelt_gog_free(g); }
};

struct CertHandle {
  orelt_certificate* c = nullptr;
  ~CertHandle() { orelt_certificate_free(c); }
};

void loadPresentation(const std::string& path, PresHandle& h) {
  int rc = orelt_presentation_parse(readFile(path).c_str(), &h.p);
  if (rc != ORELT_OK) die(rc);
}

void loadGraph(const std::string& path, GogHandle& h) {
  int rc = orelt_gog_parse(readFile(path).c_str(), &h.g);
  if (rc != ORELT_OK) die(rc);
}

int finish(int rc, char* report, int negative, bool failNegative) {
  if (rc != ORELT_OK) die(rc);
  std::fputs(report, stdout);
  orelt_string_free(report);
  return (failNegative && negative) ? kExitNegative : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-relator group toolkit"};
  app.require_subcommand(1);
  // let --fail-negative appear after the subcommand as well
  app.fallthrough();

  bool failNegative = false;
  app.add_flag("--fail-negative", failNegative,
               "exit 1 when the verdict is a proven negative");

  std::string presPath, graphPath, targetPath, certPath, word, other;
  int whiteheadCap = 6;
  int degreeCap = 6;
  int maxDegree = 4;
  int bound = 16;
  int maxWitnessLength = 4, maxPower = 3, maxCosetPower = 6;
  int maxConjLength = 4, maxFactors = 3, maxQuotientDegree = 4;
  int rank = 2, maxRootLength = 4, exponent = 2;

  auto* classify = app.add_subcommand("classify", "ends, torsion, free factors");
  classify->add_option("--pres", presPath, "presentation file")->required();
  classify->add_option("--whitehead-cap", whiteheadCap, "rank cap for Whitehead moves");

  auto* wp = app.add_subcommand("wp", "word problem via Dehn reduction");
  wp->add_option("--pres", presPath)->required();
  wp->add_option("--word", word)->required();
  wp->add_option("--other", other, "second word; switches to equality mode");

  auto* minimizeCmd = app.add_subcommand("minimize", "Whitehead-minimal cyclic form");
  minimizeCmd->add_option("--pres", presPath, "free-group context (gens only)")->required();
  minimizeCmd->add_option("--word", word)->required();
  minimizeCmd->add_option("--whitehead-cap", whiteheadCap);

  auto* primitive = app.add_subcommand("primitive", "free-basis membership");
  primitive->add_option("--pres", presPath)->required();
  primitive->add_option("--word", word)->required();
  primitive->add_option("--whitehead-cap", whiteheadCap);

  auto* order = app.add_subcommand("order", "certified torsion order");
  order->add_option("--pres", presPath)->required();
  order->add_option("--word", word)->required();
  order->add_option("--bound", bound, "largest order to try");
  order->add_option("--degree-cap", degreeCap);

  auto* quotients = app.add_subcommand("quotients", "finite symmetric quotients");
  quotients->add_option("--pres", presPath)->required();
  quotients->add_option("--word", word, "certify this word nontrivial");
  quotients->add_option("--max-degree", maxDegree);
  quotients->add_option("--degree-cap", degreeCap);

  auto* malnormal = app.add_subcommand("malnormal", "malnormality witness search");
  malnormal->add_option("--pres", presPath)->required();
  malnormal->add_option("--word", word)->required();
  malnormal->add_option("--max-witness-length", maxWitnessLength);
  malnormal->add_option("--max-power", maxPower);
  malnormal->add_option("--max-coset-power", maxCosetPower);

  auto* tmember = app.add_subcommand("tmember", "membership in the relator kernel");
  tmember->add_option("--pres", presPath)->required();
  tmember->add_option("--word", word)->required();
  tmember->add_option("--max-conjugator-length", maxConjLength);
  tmember->add_option("--max-factors", maxFactors);
  tmember->add_option("--max-quotient-degree", maxQuotientDegree);

  auto* gog = app.add_subcommand("gog", "graph-of-groups commands");
  gog->require_subcommand(1);
  auto* gogValidate = gog->add_subcommand("validate", "structural and shape checks");
  gogValidate->add_option("--graph", graphPath)->required();
  gogValidate->add_option("--degree-cap", degreeCap);
  auto* gogPi1 = gog->add_subcommand("pi1", "fundamental-group presentation");
  gogPi1->add_option("--graph", graphPath)->required();
  auto* gogVerify = gog->add_subcommand("verify", "certificate isomorphism check");
  gogVerify->add_option("--graph", graphPath)->required();
  gogVerify->add_option("--target", targetPath)->required();
  gogVerify->add_option("--cert", certPath)->required();

  auto* harness = app.add_subcommand("harness", "exhaustive checks");
  harness->require_subcommand(1);
  auto* harnessEnds = harness->add_subcommand("ends", "ends biconditional over all roots");
  harnessEnds->add_option("--rank", rank);
  harnessEnds->add_option("--max-root-length", maxRootLength);
  harnessEnds->add_option("--exponent", exponent);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    char* report = nullptr;
    int negative = 0;

    // the API call must be sequenced before finish() reads `report`
    if (classify->parsed()) {
      PresHandle p;
      loadPresentation(presPath, p);
      int rc = orelt_classify(p.p, whiteheadCap, &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
    if (wp->parsed()) {
      PresHandle p;
      loadPresentation(presPath, p);
      int rc = orelt_wp(p.p, word.c_str(), other.empty() ? nullptr : other.c_str(),
                        &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
    if (minimizeCmd->parsed()) {
      PresHandle p;
      loadPresentation(presPath, p);
      int rc = orelt_minimize(p.p, word.c_str(), whiteheadCap, &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
    if (primitive->parsed()) {
      PresHandle p;
      loadPresentation(presPath, p);
      int rc = orelt_primitive(p.p, word.c_str(), whiteheadCap, &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
    if (order->parsed()) {
      PresHandle p;
      loadPresentation(presPath, p);
      int rc = orelt_order(p.p, word.c_str(), bound, degreeCap, &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
    if (quotients->parsed()) {
      PresHandle p;
      loadPresentation(presPath, p);
      int rc = orelt_quotients(p.p, word.empty() ? nullptr : word.c_str(), maxDegree,
                               degreeCap, &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
    if (malnormal->parsed()) {
      PresHandle p;
      loadPresentation(presPath, p);
      int rc = orelt_malnormal(p.p, word.c_str(), maxWitnessLength, maxPower,
                               maxCosetPower, &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
    if (tmember->parsed()) {
      PresHandle p;
      loadPresentation(presPath, p);
      int rc = orelt_tmember(p.p, word.c_str(), maxConjLength, maxFactors,
                             maxQuotientDegree, &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
    if (gogValidate->parsed()) {
      GogHandle g;
      loadGraph(graphPath, g);
      int rc = orelt_gog_validate(g.g, degreeCap, &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
    if (gogPi1->parsed()) {
      GogHandle g;
      loadGraph(graphPath, g);
      int rc = orelt_gog_pi1(g.g, &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
    if (gogVerify->parsed()) {
      GogHandle g;
      loadGraph(graphPath, g);
      PresHandle target, start;
      loadPresentation(targetPath, target);
      int rc = orelt_gog_pi1_presentation(g.g, &start.p);
      if (rc != ORELT_OK) die(rc);
      CertHandle cert;
      rc = orelt_certificate_parse(readFile(certPath).c_str(), start.p, &cert.c);
      if (rc != ORELT_OK) die(rc);
      rc = orelt_gog_verify(g.g, target.p, cert.c, &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
    if (harnessEnds->parsed()) {
      int rc = orelt_harness_ends(rank, maxRootLength, exponent, &report, &negative);
      return finish(rc, report, negative, failNegative);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
