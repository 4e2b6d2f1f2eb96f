#include "orelt/orelt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "orelt/gog.hpp"
#include "orelt/parse.hpp"
#include "orelt/presentation.hpp"
#include "orelt/report.hpp"

namespace {

thread_local std::string g_lastError;

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Exception-to-error-code boundary shared by every entry point.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return ORELT_OK;
  } catch (const orelt::ParseError& e) {
    g_lastError = e.what();
    return ORELT_ERR_PARSE;
  } catch (const std::domain_error& e) {
    g_lastError = e.what();
    return ORELT_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_lastError = e.what();
    return ORELT_ERR_DOMAIN;
  } catch (const std::runtime_error& e) {
    g_lastError = e.what();
    return ORELT_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_lastError = e.what();
    return ORELT_ERR_INTERNAL;
  } catch (...) {
    g_lastError = "unknown error";
    return ORELT_ERR_INTERNAL;
  }
}

void emit(const orelt::ReportResult& r, char** report, int* negative) {
  if (report) {
    *report = dupString(r.text);
    if (!*report) throw std::bad_alloc();
  }
  if (negative) *negative = r.negative ? 1 : 0;
}

}  // namespace

struct orelt_presentation {
  orelt::Presentation value;
};

struct orelt_gog {
  orelt::GraphOfGroups value;
};

struct orelt_certificate {
  orelt::TietzeCertificate value;
};

namespace {

orelt::OneRelatorPresentation asOneRelator(const orelt_presentation* p) {
  if (p->value.relators.size() != 1) {
    throw std::domain_error("this command needs a presentation with exactly one relator");
  }
  return orelt::OneRelatorPresentation::make(p->value.rank, p->value.relators[0],
                                             p->value.names);
}

orelt::Word wordArg(const orelt_presentation* p, const char* text) {
  if (!text) throw std::invalid_argument("missing word argument");
  return orelt::parseWord(text, p->value.names);
}

}  // namespace

extern "C" {

const char* orelt_last_error(void) { return g_lastError.c_str(); }

void orelt_string_free(char* s) { std::free(s); }

int orelt_presentation_parse(const char* text, orelt_presentation** out) {
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    *out = new orelt_presentation{orelt::parsePresentation(text)};
  });
}

int orelt_presentation_print(const orelt_presentation* p, char** out) {
  return guarded([&] {
    if (!p || !out) throw std::invalid_argument("null argument");
    *out = dupString(orelt::printPresentation(p->value));
    if (!*out) throw std::bad_alloc();
  });
}

void orelt_presentation_free(orelt_presentation* p) { delete p; }

int orelt_classify(const orelt_presentation* p, int whitehead_cap, char** report,
                   int* negative) {
  return guarded([&] {
    if (!p) throw std::invalid_argument("null presentation");
    emit(orelt::reportClassify(asOneRelator(p), whitehead_cap), report, negative);
  });
}

int orelt_wp(const orelt_presentation* p, const char* word, const char* other,
             char** report, int* negative) {
  return guarded([&] {
    if (!p) throw std::invalid_argument("null presentation");
    std::optional<orelt::Word> v;
    if (other) v = wordArg(p, other);
    emit(orelt::reportWordProblem(asOneRelator(p), wordArg(p, word), v), report,
         negative);
  });
}

int orelt_order(const orelt_presentation* p, const char* word, int bound,
                int quotient_degree_cap, char** report, int* negative) {
  return guarded([&] {
    if (!p) throw std::invalid_argument("null presentation");
    emit(orelt::reportOrder(asOneRelator(p), wordArg(p, word), bound,
                            quotient_degree_cap),
         report, negative);
  });
}

int orelt_malnormal(const orelt_presentation* p, const char* word,
                    int max_witness_length, int max_power, int max_coset_power,
                    char** report, int* negative) {
  return guarded([&] {
    if (!p) throw std::invalid_argument("null presentation");
    orelt::SearchBounds bounds{max_witness_length, max_power, max_coset_power};
    emit(orelt::reportMalnormal(asOneRelator(p), wordArg(p, word), bounds), report,
         negative);
  });
}

int orelt_tmember(const orelt_presentation* p, const char* word,
                  int max_conjugator_length, int max_factors, int max_quotient_degree,
                  char** report, int* negative) {
  return guarded([&] {
    if (!p) throw std::invalid_argument("null presentation");
    orelt::SearchBounds bounds{max_conjugator_length, max_factors, 6};
    emit(orelt::reportTMember(asOneRelator(p), wordArg(p, word), bounds,
                              max_quotient_degree),
         report, negative);
  });
}

int orelt_minimize(const orelt_presentation* p, const char* word, int whitehead_cap,
                   char** report, int* negative) {
  return guarded([&] {
    if (!p) throw std::invalid_argument("null presentation");
    emit(orelt::reportMinimize(p->value.rank, wordArg(p, word), p->value.names,
                               whitehead_cap),
         report, negative);
  });
}

int orelt_primitive(const orelt_presentation* p, const char* word, int whitehead_cap,
                    char** report, int* negative) {
  return guarded([&] {
    if (!p) throw std::invalid_argument("null presentation");
    emit(orelt::reportPrimitive(p->value.rank, wordArg(p, word), p->value.names,
                                whitehead_cap),
         report, negative);
  });
}

int orelt_quotients(const orelt_presentation* p, const char* word, int max_degree,
                    int quotient_degree_cap, char** report, int* negative) {
  return guarded([&] {
    if (!p) throw std::invalid_argument("null presentation");
    std::optional<orelt::Word> w;
    if (word) w = wordArg(p, word);
    emit(orelt::reportQuotients(p->value, w, max_degree, quotient_degree_cap), report,
         negative);
  });
}

int orelt_gog_parse(const char* text, orelt_gog** out) {
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    *out = new orelt_gog{orelt::parseGraphOfGroups(text)};
  });
}

void orelt_gog_free(orelt_gog* g) { delete g; }

int orelt_gog_validate(const orelt_gog* g, int quotient_degree_cap, char** report,
                       int* negative) {
  return guarded([&] {
    if (!g) throw std::invalid_argument("null graph");
    emit(orelt::reportGogValidate(g->value, quotient_degree_cap), report, negative);
  });
}

int orelt_gog_pi1(const orelt_gog* g, char** report, int* negative) {
  return guarded([&] {
    if (!g) throw std::invalid_argument("null graph");
    emit(orelt::reportGogPi1(g->value), report, negative);
  });
}

int orelt_gog_pi1_presentation(const orelt_gog* g, orelt_presentation** out) {
  return guarded([&] {
    if (!g || !out) throw std::invalid_argument("null argument");
    *out = new orelt_presentation{orelt::fundamentalGroup(g->value)};
  });
}

int orelt_certificate_parse(const char* text, const orelt_presentation* start,
                            orelt_certificate** out) {
  return guarded([&] {
    if (!text || !start || !out) throw std::invalid_argument("null argument");
    *out = new orelt_certificate{orelt::parseCertificate(text, start->value)};
  });
}

void orelt_certificate_free(orelt_certificate* c) { delete c; }

int orelt_gog_verify(const orelt_gog* g, const orelt_presentation* target,
                     const orelt_certificate* cert, char** report, int* negative) {
  return guarded([&] {
    if (!g || !target || !cert) throw std::invalid_argument("null argument");
    emit(orelt::reportGogVerify(g->value, target->value, cert->value), report,
         negative);
  });
}

int orelt_harness_ends(int rank, int max_root_length, int exponent, char** report,
                       int* negative) {
  return guarded(
      [&] { emit(orelt::reportHarnessEnds(rank, max_root_length, exponent), report, negative); });
}

}  // extern "C"
