#ifndef RVT_H
#define RVT_H

/* C interface to librvt: RVT codes for the Monster (Semple) tower over R^3.
 *
 * The library decides which words over the alphabet {R, V, T1, T2, L1, L2,
 * L3} are realized by points of the tower, reconstructs the canonical
 * Kumpera-Ruiz chart sequence for an admissible word, reports which critical
 * planes exist at each level together with their Baby Monster birth data
 * delta(i,j), and counts/enumerates admissible words per level.
 *
 * Conventions:
 *   - Functions return rvt_status; RVT_OK is 0.
 *   - Strings returned through char** are heap allocated; release them with
 *     rvt_string_free.
 *   - rvt_word is an opaque handle; release with rvt_word_free.
 *   - All operations are pure; handles are immutable after creation and may
 *     be shared across threads without locking.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RVT_BUILD_SHARED)
#    define RVT_API __declspec(dllexport)
#  else
#    define RVT_API __declspec(dllimport)
#  endif
#else
#  define RVT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rvt_status {
  RVT_OK = 0,
  RVT_ERROR_PARSE = 1,    /* input text is not a word over the alphabet */
  RVT_ERROR_SPELLING = 2, /* word breaks a spelling rule */
  RVT_ERROR_ARGUMENT = 3, /* null pointer or out-of-domain argument */
  RVT_ERROR_INTERNAL = 4
} rvt_status;

/* The three critical-plane slots of a distribution plane at a level. */
typedef enum rvt_slot {
  RVT_SLOT_V = 0,
  RVT_SLOT_T1 = 1,
  RVT_SLOT_T2 = 2
} rvt_slot;

typedef enum rvt_format {
  RVT_FORMAT_TEXT = 0,
  RVT_FORMAT_JSON = 1
} rvt_format;

typedef struct rvt_word rvt_word;

typedef struct rvt_parse_error {
  size_t position; /* 1-based character index of the offending token */
  char message[120];
} rvt_parse_error;

typedef struct rvt_violation {
  size_t position;   /* 1-based letter index of the offending letter */
  int rule;          /* spelling rule id, 1..5 */
  char offending[4]; /* canonical letter name */
  char preceding[4]; /* empty string at position 1 */
} rvt_violation;

/* ---- words ------------------------------------------------------------ */

/* Tokenizes text into a word.  Lowercase is accepted and canonicalized;
 * spaces between tokens are ignored.  Does not check spelling rules.
 * On RVT_ERROR_PARSE, *error (if non-null) is filled. */
RVT_API rvt_status rvt_word_parse(const char* text, rvt_word** out,
                                  rvt_parse_error* error);

RVT_API void rvt_word_free(rvt_word* word);

RVT_API size_t rvt_word_length(const rvt_word* word);

/* Canonical string form, e.g. "RVL1T2". */
RVT_API rvt_status rvt_word_string(const rvt_word* word, char** out);

/* RVT_OK when the word is admissible (the empty word is); otherwise
 * RVT_ERROR_SPELLING with *violation (if non-null) describing the first
 * offending position. */
RVT_API rvt_status rvt_word_validate(const rvt_word* word,
                                     rvt_violation* violation);

/* Deterministic admissible word of the given length (>= 1) for a seed. */
RVT_API rvt_status rvt_random_admissible(size_t length, uint64_t seed,
                                         rvt_word** out);

/* ---- successor queries ------------------------------------------------- */

/* Letters that may follow the given letter, per the spelling-rule table.
 * Output is space separated in canonical order, e.g. "R V T2 L3". */
RVT_API rvt_status rvt_letter_successors(const char* letter, char** out);

/* Letters that may extend an admissible word, derived from the critical
 * planes present at its top level. */
RVT_API rvt_status rvt_word_successors(const rvt_word* word, char** out);

/* ---- stratification data ---------------------------------------------- */

/* Critical planes present at the top level of an admissible, nonempty word. */
RVT_API rvt_status rvt_configuration(const rvt_word* word, int* v_present,
                                     int* t1_present, int* t2_present);

/* Birth data of the plane occupying a slot at the top level.  *present is 0
 * when the slot is empty (birth/steps then left untouched); the plane is
 * delta(birth, steps). */
RVT_API rvt_status rvt_birth_data(const rvt_word* word, rvt_slot slot,
                                  int* present, int* birth, int* steps);

/* Full per-level report: charts, configurations, plane ledgers. */
RVT_API rvt_status rvt_analyze_render(const rvt_word* word, rvt_format format,
                                      char** out);

/* ---- backward trace ---------------------------------------------------- */

/* Backward critical-hyperplane trace for slot T1 or T2.  *exists is 1 when
 * the descent reaches a vertical plane (then delta(*birth, *steps)). */
RVT_API rvt_status rvt_trace_outcome(const rvt_word* word, rvt_slot slot,
                                     int* exists, int* birth, int* steps);

/* Descent log plus outcome in the requested format. */
RVT_API rvt_status rvt_trace_render(const rvt_word* word, rvt_slot slot,
                                    rvt_format format, char** out);

/* ---- counting and enumeration ------------------------------------------ */

/* Number of admissible words of exactly the given length, as a decimal
 * string (exact at any length). */
RVT_API rvt_status rvt_count(size_t length, char** decimal_out);

/* Called once per enumerated word (canonical string form); return nonzero
 * to stop early. */
typedef int (*rvt_word_visitor)(const char* word, void* user);

/* Streams admissible words of the given length in canonical order.  When
 * prefix is non-null and nonempty, only words extending that admissible
 * prefix are emitted. */
RVT_API rvt_status rvt_enumerate(size_t length, const char* prefix,
                                 rvt_word_visitor visit, void* user);

/* Cross-checks streamed enumeration against transfer-matrix counts for all
 * lengths up to max_length (at most 12).  *ok is 1 when every level agrees;
 * *report_out (if non-null) receives a per-level text report. */
RVT_API rvt_status rvt_verify_counts(size_t max_length, int* ok,
                                     char** report_out);

/* ---- generated documentation ------------------------------------------- */

/* Markdown tables (spelling rules, plane configurations, birth-data base
 * cases), computed from the engines.  Deterministic. */
RVT_API rvt_status rvt_tables_markdown(char** out);

RVT_API void rvt_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RVT_H */
