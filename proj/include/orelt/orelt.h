/* C interface to the one-relator toolkit. All functions return ORELT_OK or
 * an error code; orelt_last_error() describes the most recent failure on
 * the calling thread. Strings returned through `char**` are heap-allocated
 * and must be released with orelt_string_free. Reports are structured text
 * with a stable field order; `negative` (when non-NULL) receives 1 when
 * the command's verdict is a proven negative, else 0. */
#ifndef ORELT_H
#define ORELT_H

#ifdef __cplusplus
extern "C" {
#endif

#define ORELT_OK 0
#define ORELT_ERR_PARSE 1    /* malformed input text */
#define ORELT_ERR_DOMAIN 2   /* operation precondition not met */
#define ORELT_ERR_RESOURCE 3 /* configured cap exceeded */
#define ORELT_ERR_INTERNAL 4

typedef struct orelt_presentation orelt_presentation;
typedef struct orelt_gog orelt_gog;
typedef struct orelt_certificate orelt_certificate;

const char* orelt_last_error(void);
void orelt_string_free(char* s);

/* Presentation text: a `gens:` line, then zero or more `rel:` lines. */
int orelt_presentation_parse(const char* text, orelt_presentation** out);
int orelt_presentation_print(const orelt_presentation* p, char** out);
void orelt_presentation_free(orelt_presentation* p);

/* One-relator commands; the presentation must have exactly one relator. */
int orelt_classify(const orelt_presentation* p, int whitehead_cap, char** report,
                   int* negative);
int orelt_wp(const orelt_presentation* p, const char* word, const char* other,
             char** report, int* negative);
int orelt_order(const orelt_presentation* p, const char* word, int bound,
                int quotient_degree_cap, char** report, int* negative);
int orelt_malnormal(const orelt_presentation* p, const char* word,
                    int max_witness_length, int max_power, int max_coset_power,
                    char** report, int* negative);
int orelt_tmember(const orelt_presentation* p, const char* word,
                  int max_conjugator_length, int max_factors, int max_quotient_degree,
                  char** report, int* negative);

/* Free-group commands; relators in `p` are ignored, only rank and names
 * matter. */
int orelt_minimize(const orelt_presentation* p, const char* word, int whitehead_cap,
                   char** report, int* negative);
int orelt_primitive(const orelt_presentation* p, const char* word, int whitehead_cap,
                    char** report, int* negative);

/* Finite-quotient survey of an arbitrary presentation; `word` may be NULL
 * to list hom counts instead of certifying nontriviality. */
int orelt_quotients(const orelt_presentation* p, const char* word, int max_degree,
                    int quotient_degree_cap, char** report, int* negative);

/* Graph-of-groups commands. */
int orelt_gog_parse(const char* text, orelt_gog** out);
void orelt_gog_free(orelt_gog* g);
int orelt_gog_validate(const orelt_gog* g, int quotient_degree_cap, char** report,
                       int* negative);
int orelt_gog_pi1(const orelt_gog* g, char** report, int* negative);
int orelt_gog_pi1_presentation(const orelt_gog* g, orelt_presentation** out);

/* Certificates are parsed against the presentation they will be replayed
 * on (generator names resolve against its evolving generator list). */
int orelt_certificate_parse(const char* text, const orelt_presentation* start,
                            orelt_certificate** out);
void orelt_certificate_free(orelt_certificate* c);
int orelt_gog_verify(const orelt_gog* g, const orelt_presentation* target,
                     const orelt_certificate* cert, char** report, int* negative);

/* Exhaustive ends-lemma check over all roots up to the given length. */
int orelt_harness_ends(int rank, int max_root_length, int exponent, char** report,
                       int* negative);

#ifdef __cplusplus
}
#endif

#endif /* ORELT_H */
