#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "orelt/orelt.h"

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ORELT_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Pres {
  orelt_presentation* p = nullptr;
  ~Pres() { orelt_presentation_free(p); }
};

struct Gog {
  orelt_gog* g = nullptr;
  ~Gog() { orelt_gog_free(g); }
};

struct Cert {
  orelt_certificate* c = nullptr;
  ~Cert() { orelt_certificate_free(c); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  orelt_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("presentation lifecycle and errors") {
  Pres p;
  REQUIRE(orelt_presentation_parse("gens: a t\nrel: (t^-1 a^-1 t a^2)^2\n", &p.p) ==
          ORELT_OK);
  char* printed = nullptr;
  REQUIRE(orelt_presentation_print(p.p, &printed) == ORELT_OK);
  std::string text = take(printed);
  CHECK(text.find("gens: a t") != std::string::npos);

  orelt_presentation* bad = nullptr;
  CHECK(orelt_presentation_parse("gens: a\nrel: b\n", &bad) == ORELT_ERR_PARSE);
  CHECK(std::string(orelt_last_error()).find("unknown generator") != std::string::npos);
  CHECK(orelt_presentation_parse(nullptr, &bad) == ORELT_ERR_DOMAIN);
}

TEST_CASE("classify and word problem") {
  Pres p;
  REQUIRE(orelt_presentation_parse(slurp("fig1.pres").c_str(), &p.p) == ORELT_OK);

  char* report = nullptr;
  int negative = -1;
  REQUIRE(orelt_classify(p.p, 6, &report, &negative) == ORELT_OK);
  std::string text = take(report);
  CHECK(text.find("ends.G: one") != std::string::npos);
  CHECK(text.find("torsion: true") != std::string::npos);
  CHECK(text.find("fuchsian: false") != std::string::npos);

  // deterministic reports
  char* again = nullptr;
  REQUIRE(orelt_classify(p.p, 6, &again, &negative) == ORELT_OK);
  CHECK(take(again) == text);

  REQUIRE(orelt_wp(p.p, "(t^-1 a^-1 t a^2)^2", nullptr, &report, &negative) == ORELT_OK);
  text = take(report);
  CHECK(text.find("result: true") != std::string::npos);
  CHECK(negative == 0);

  REQUIRE(orelt_wp(p.p, "a", nullptr, &report, &negative) == ORELT_OK);
  CHECK(take(report).find("result: false") != std::string::npos);
  CHECK(negative == 1);

  REQUIRE(orelt_wp(p.p, "t^-1 a^-1 t a^2", "(t^-1 a^-1 t a^2)^-1", &report, &negative) ==
          ORELT_OK);
  CHECK(take(report).find("result: true") != std::string::npos);

  // free-group commands ignore the relator
  REQUIRE(orelt_primitive(p.p, "a t^-1", 6, &report, &negative) == ORELT_OK);
  CHECK(take(report).find("primitive: true") != std::string::npos);
  REQUIRE(orelt_minimize(p.p, "a t a^-1", 6, &report, &negative) == ORELT_OK);
  CHECK(take(report).find("minimal-length: 1") != std::string::npos);
}

TEST_CASE("domain and resource errors surface as codes") {
  Pres freeGroup;
  REQUIRE(orelt_presentation_parse("gens: a b\n", &freeGroup.p) == ORELT_OK);
  char* report = nullptr;
  CHECK(orelt_classify(freeGroup.p, 6, &report, nullptr) == ORELT_ERR_DOMAIN);

  CHECK(orelt_harness_ends(5, 3, 2, &report, nullptr) == ORELT_ERR_RESOURCE);

  Pres p;
  REQUIRE(orelt_presentation_parse(slurp("fig1.pres").c_str(), &p.p) == ORELT_OK);
  CHECK(orelt_wp(p.p, "q", nullptr, &report, nullptr) == ORELT_ERR_PARSE);
}

TEST_CASE("order, quotients and probes") {
  Pres p;
  REQUIRE(orelt_presentation_parse("gens: a b\nrel: (a b a^-1 b^-1)^3\n", &p.p) ==
          ORELT_OK);
  char* report = nullptr;
  int negative = -1;
  REQUIRE(orelt_order(p.p, "a b a^-1 b^-1", 6, 6, &report, &negative) == ORELT_OK);
  std::string text = take(report);
  CHECK(text.find("status: proven-true") != std::string::npos);
  CHECK(text.find("order: 3") != std::string::npos);

  REQUIRE(orelt_quotients(p.p, "a", 3, 6, &report, &negative) == ORELT_OK);
  CHECK(take(report).find("status: proven-true") != std::string::npos);

  Pres ab2;
  REQUIRE(orelt_presentation_parse("gens: a b\nrel: (a b)^2\n", &ab2.p) == ORELT_OK);
  REQUIRE(orelt_tmember(ab2.p, "a b", 2, 3, 4, &report, &negative) == ORELT_OK);
  CHECK(take(report).find("status: proven-true") != std::string::npos);
  REQUIRE(orelt_tmember(ab2.p, "a", 2, 3, 4, &report, &negative) == ORELT_OK);
  CHECK(take(report).find("status: proven-false") != std::string::npos);
  CHECK(negative == 1);

  Pres bc;
  REQUIRE(orelt_presentation_parse("gens: b c\nrel: (b c^2)^2\n", &bc.p) == ORELT_OK);
  REQUIRE(orelt_malnormal(bc.p, "b c^3 b c", 4, 2, 6, &report, &negative) == ORELT_OK);
  CHECK(take(report).find("witness-found: true") != std::string::npos);
}

TEST_CASE("graph commands") {
  Gog g;
  REQUIRE(orelt_gog_parse(slurp("fig1.gog").c_str(), &g.g) == ORELT_OK);

  char* report = nullptr;
  int negative = -1;
  REQUIRE(orelt_gog_validate(g.g, 4, &report, &negative) == ORELT_OK);
  CHECK(take(report).find("violations: 0") != std::string::npos);
  CHECK(negative == 0);

  REQUIRE(orelt_gog_pi1(g.g, &report, &negative) == ORELT_OK);
  CHECK(take(report).find("gens: b c s") != std::string::npos);

  Pres start;
  REQUIRE(orelt_gog_pi1_presentation(g.g, &start.p) == ORELT_OK);
  Cert cert;
  REQUIRE(orelt_certificate_parse(slurp("fig1.cert").c_str(), start.p, &cert.c) ==
          ORELT_OK);
  Pres target;
  REQUIRE(orelt_presentation_parse(slurp("fig1_target.pres").c_str(), &target.p) ==
          ORELT_OK);
  REQUIRE(orelt_gog_verify(g.g, target.p, cert.c, &report, &negative) == ORELT_OK);
  CHECK(take(report).find("verified: true") != std::string::npos);
  CHECK(negative == 0);
}

TEST_CASE("harness runs through the interface") {
  char* report = nullptr;
  int negative = -1;
  REQUIRE(orelt_harness_ends(2, 3, 2, &report, &negative) == ORELT_OK);
  std::string text = take(report);
  CHECK(text.find("violations: 0") != std::string::npos);
  CHECK(negative == 0);
}
