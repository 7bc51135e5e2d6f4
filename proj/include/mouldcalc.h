/*
 * mouldcalc — exact computer algebra for moulds, flexion operators and the
 * double shuffle dictionary.
 *
 * C interface of the shared library. All objects are opaque handles owned
 * by the library; every function that can fail returns an mc_status, with
 * a thread-local message available through mc_last_error(). Strings
 * returned through char** are heap-allocated and must be released with
 * mc_string_free().
 */

#ifndef MOULDCALC_H
#define MOULDCALC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mc_mould mc_mould;   /* alphabet-tagged, depth-truncated mould */
typedef struct mc_ncpoly mc_ncpoly; /* polynomial in the noncommutative letters x, y */

typedef enum mc_status {
    MC_OK = 0,
    MC_ERR_ARGUMENT = 1, /* null handle, unknown operation name, bad bound */
    MC_ERR_PARSE = 2,    /* malformed or non-canonical text payload */
    MC_ERR_DOMAIN = 3,   /* operation preconditions violated (alphabet, depth, ...) */
    MC_ERR_IO = 4,       /* file could not be read or written */
} mc_status;

const char *mc_version(void);

/* Message describing the most recent failure on this thread. */
const char *mc_last_error(void);

void mc_string_free(char *s);
void mc_mould_free(mc_mould *m);
void mc_ncpoly_free(mc_ncpoly *f);

/* ---- serialization ---------------------------------------------------- */

mc_status mc_mould_parse(const char *text, mc_mould **out);
mc_status mc_mould_to_text(const mc_mould *m, char **out);
mc_status mc_mould_read_file(const char *path, mc_mould **out);
mc_status mc_mould_write_file(const mc_mould *m, const char *path);

mc_status mc_ncpoly_parse(const char *text, mc_ncpoly **out);
mc_status mc_ncpoly_to_text(const mc_ncpoly *f, char **out);
mc_status mc_ncpoly_read_file(const char *path, mc_ncpoly **out);
mc_status mc_ncpoly_write_file(const mc_ncpoly *f, const char *path);

/* ---- mould operations -------------------------------------------------- */

/* ops: neg push mantar pari dur dar swap expari logari invgari push-symmetrize */
mc_status mc_mould_unary(const char *op, const mc_mould *a, mc_mould **out);

/* ops: add sub mu lu amit anit arit ari preari gari adari ganit
   (operator-parameter first where applicable: amit/anit/arit/ganit compute
   op(A).B with A the first argument) */
mc_status mc_mould_binary(const char *op, const mc_mould *a, const mc_mould *b, mc_mould **out);

/* Lower the truncation bound of a mould. */
mc_status mc_mould_truncate(const mc_mould *a, int depth, mc_mould **out);

mc_status mc_pal(int depth, mc_mould **out);
mc_status mc_pil(int depth, mc_mould **out);
mc_status mc_dupal(int depth, mc_mould **out);
mc_status mc_pic(int depth, mc_mould **out);

/* ---- dictionary -------------------------------------------------------- */

/* max_depth < 0 selects the weight of f. */
mc_status mc_ma(const mc_ncpoly *f, int max_depth, mc_mould **out);
mc_status mc_mi(const mc_ncpoly *f, int max_depth, mc_mould **out);
mc_status mc_poisson(const mc_ncpoly *f, const mc_ncpoly *g, mc_ncpoly **out);

/* f_* in the y alphabet, serialized as a ypolyfile. */
mc_status mc_fstar_text(const mc_ncpoly *f, char **out);

/* Dimorphic membership summary, e.g. "al*il (underline) verified to depth 3". */
mc_status mc_classify(const mc_mould *m, char **out);

mc_status mc_is_in_ds(const mc_ncpoly *f, int *out);

/* Deterministic echelon basis of the weight component of the double
   shuffle space. The array and its entries are owned by the caller. */
mc_status mc_ds_basis(int weight, mc_ncpoly ***out, size_t *count);
void mc_ncpoly_array_free(mc_ncpoly **arr, size_t count);

/* ---- verification ------------------------------------------------------ */

/* Newline-separated list of suite names. */
mc_status mc_suite_names(char **out);

/* Runs one named suite. cases/depth < 0 pick the suite defaults. The
   report (human text, or the machine-readable variant when as_json is
   nonzero) is always produced; *passed reports the outcome. */
mc_status mc_verify(const char *suite, uint64_t seed, int cases, int depth, int as_json,
                    char **report, int *passed);

/* The ganit consistency comparison at the given depth. */
mc_status mc_compare_ganit(int depth, uint64_t seed, int as_json, char **report, int *passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MOULDCALC_H */
