/* g2x — exact cohomology and circle-bundle spectral-sequence verifier.
 *
 * C interface to the computation core. All functions are thread-safe; the
 * opaque handles are immutable after creation and must be released with the
 * matching *_free call. Strings returned through handles stay valid until
 * the handle is freed.
 */
#ifndef G2X_H
#define G2X_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g2x_status {
    G2X_OK = 0,
    G2X_ERR_PARSE = 1,   /* malformed space/fibration spec or parameter out of range */
    G2X_ERR_DOMAIN = 2,  /* precondition violated (inhomogeneous presentation, ...) */
    G2X_ERR_LIMIT = 3,   /* a configured search ceiling was exceeded */
    G2X_ERR_INTERNAL = 4
} g2x_status;

/* Resolved space spec (family, parameter, presentation variant). */
typedef struct g2x_space g2x_space;

/* Result of one command: human-readable text, JSON document, pass flag. */
typedef struct g2x_report g2x_report;

const char* g2x_version(void);

/* Message for the most recent failing call on this thread. */
const char* g2x_last_error(void);

/* Space grammar: cp:<n> | g2+:<n> | v2:<n> | s:<n> | s2xs2, with an optional
 * @verbatim / @corrected suffix (default corrected). */
g2x_status g2x_space_parse(const char* spec, g2x_space** out);
void g2x_space_free(g2x_space* s);

/* Cohomology groups of a space, degree 0..dimension. */
g2x_status g2x_cohomology(const g2x_space* s, g2x_report** out);

/* Full ring report: presentation, per-degree bases, multiplication tables. */
g2x_status g2x_ring(const g2x_space* s, g2x_report** out);

/* Ring / validation for a presentation in the text format
 * ("gen <name> <deg>" / "rel <poly>" / "top <d>" lines). */
g2x_status g2x_ring_from_text(const char* presentation, g2x_report** out);
g2x_status g2x_validate_text(const char* presentation, g2x_report** out);

/* Circle-bundle spectral sequence over `base` checked against `total`.
 * mode: "verify" or "derive-d2"; print_pages != 0 embeds the page tables. */
g2x_status g2x_gysin(const g2x_space* total, const g2x_space* base, const char* mode,
                     int print_pages, g2x_report** out);

/* Long-exact-sequence deduction for a catalog fibration: "hopf:<n>" or
 * "grassfib:<n>". */
g2x_status g2x_homotopy(const char* fibration, int max_level, g2x_report** out);

/* Invariant comparison of two spaces (groups, cup-power indices, homotopy,
 * bounded isomorphism search). */
g2x_status g2x_compare(const g2x_space* a, const g2x_space* b, int iso_bound, int max_pi_level,
                       g2x_report** out);

/* Presentation validation: homogeneity, Betti/torsion cross-checks,
 * truncation above the dimension. */
g2x_status g2x_validate(const g2x_space* s, g2x_report** out);

/* The full verification suite over k in [k_min, k_max] (2..8). variant is
 * "corrected" (default when NULL) or "verbatim"; the verbatim run reports
 * the documented even-family failures. */
g2x_status g2x_verification_suite(int k_min, int k_max, const char* variant, g2x_report** out);

const char* g2x_report_text(const g2x_report* r);
const char* g2x_report_json(const g2x_report* r);
/* 1 when every check in the report passed, else 0. */
int g2x_report_ok(const g2x_report* r);
void g2x_report_free(g2x_report* r);

#ifdef __cplusplus
}
#endif

#endif /* G2X_H */
