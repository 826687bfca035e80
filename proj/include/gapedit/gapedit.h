#ifndef GAPEDIT_H
#define GAPEDIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GAPEDIT_API __declspec(dllexport)
#else
#define GAPEDIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define GAPEDIT_ABI_VERSION 1

typedef enum gapedit_status {
    GAPEDIT_OK = 0,
    GAPEDIT_ERR_INVALID_ARGUMENT = 1,
    GAPEDIT_ERR_IO = 2,
    GAPEDIT_ERR_FORMAT = 3,
    GAPEDIT_ERR_LIMIT = 4,
    GAPEDIT_ERR_PRECONDITION = 5,
    GAPEDIT_ERR_INTERNAL = 6
} gapedit_status;

typedef enum gapedit_verdict { GAPEDIT_SMALL = 0, GAPEDIT_LARGE = 1 } gapedit_verdict;

typedef enum gapedit_mode {
    GAPEDIT_MODE_NOPREP = 0,
    GAPEDIT_MODE_ONE_SIDED = 1,
    GAPEDIT_MODE_TWO_SIDED = 2
} gapedit_mode;

typedef enum gapedit_index_kind {
    GAPEDIT_INDEX_ONE_SIDED_GAP = 0,
    GAPEDIT_INDEX_ONE_SIDED_WAVE = 1,
    GAPEDIT_INDEX_TWO_SIDED = 2
} gapedit_index_kind;

typedef struct gapedit_string gapedit_string;
typedef struct gapedit_index gapedit_index;

/* Exact operation counts of one run plus its wall time. */
typedef struct gapedit_result {
    gapedit_verdict verdict;
    int64_t iterations;
    int64_t oracle_queries;
    int64_t hash_retrievals;
    int64_t table_lookups;
    int64_t symbols_hashed;
    int64_t preprocess_ops;
    int64_t sample_size;
    double wall_time_s;
} gapedit_result;

typedef enum gapedit_gen_kind {
    GAPEDIT_GEN_PLANTED = 0,
    GAPEDIT_GEN_LARGE_SIDE = 1,
    GAPEDIT_GEN_PERIODIC = 2
} gapedit_gen_kind;

typedef struct gapedit_gen_params {
    gapedit_gen_kind kind;
    int64_t n;
    int64_t edits;     /* planted edits (planted, periodic) */
    int64_t sigma;
    uint64_t seed;
    int64_t k;         /* large side only */
    int64_t threshold; /* large side: ED must exceed it; 0 means 40 k^2 */
    int64_t period;    /* periodic only */
    int raw_edits;     /* planted: independent insert/delete counts */
} gapedit_gen_params;

/* Message of the last failed call on this thread; never NULL. */
GAPEDIT_API const char* gapedit_last_error(void);
GAPEDIT_API const char* gapedit_status_name(gapedit_status status);
GAPEDIT_API int gapedit_abi_version(void);
/* Releases strings returned through char** out-parameters. */
GAPEDIT_API void gapedit_free(char* text);

GAPEDIT_API gapedit_status gapedit_string_from_bytes(const uint8_t* bytes, size_t len, gapedit_string** out);
GAPEDIT_API gapedit_status gapedit_string_load(const char* path, gapedit_string** out);
GAPEDIT_API int64_t gapedit_string_length(const gapedit_string* s);
GAPEDIT_API void gapedit_string_free(gapedit_string* s);

/* Generates one instance. With a prefix, writes prefix.a, prefix.b and
   prefix.json. a, b and manifest_json may each be NULL. */
GAPEDIT_API gapedit_status gapedit_gen(const gapedit_gen_params* params, const char* prefix, gapedit_string** a,
                                       gapedit_string** b, char** manifest_json);
/* Reads an instance written by gapedit_gen; manifest_json may be NULL. */
GAPEDIT_API gapedit_status gapedit_instance_load(const char* prefix, gapedit_string** a, gapedit_string** b,
                                                 char** manifest_json);

GAPEDIT_API gapedit_status gapedit_exact_ed(const gapedit_string* a, const gapedit_string* b, int64_t* out);

/* limit caps |A| for two-sided indices; 0 selects the default. l is used by
   the wave kind only. */
GAPEDIT_API gapedit_status gapedit_index_build(gapedit_index_kind kind, const gapedit_string* a, int64_t k,
                                               int64_t l, uint64_t seed, int64_t limit, gapedit_index** out);
GAPEDIT_API gapedit_status gapedit_index_save(const gapedit_index* index, const char* path);
/* The kind is read from the file header. */
GAPEDIT_API gapedit_status gapedit_index_load(const char* path, gapedit_index** out);
GAPEDIT_API gapedit_status gapedit_index_info(const gapedit_index* index, gapedit_index_kind* kind, int64_t* n,
                                              int64_t* k, int64_t* l, int64_t* preprocess_ops);
GAPEDIT_API void gapedit_index_free(gapedit_index* index);

/* Gap test ED <= k vs ED > 40 k^2. index is ignored for noprep; for the other
   modes it must match the mode (one-sided gap or two-sided) or be NULL, in
   which case it is built from seed and counted in preprocess_ops. */
GAPEDIT_API gapedit_status gapedit_gap(gapedit_mode mode, const gapedit_string* a, const gapedit_string* b,
                                       int64_t k, uint64_t seed, const gapedit_index* index, int64_t limit,
                                       gapedit_result* out);

/* Gap test ED <= k vs ED > 10 k l. One- and two-sided modes take a one-sided
   wave index or NULL. */
GAPEDIT_API gapedit_status gapedit_wave(gapedit_mode mode, const gapedit_string* a, const gapedit_string* b,
                                        int64_t k, int64_t l, uint64_t seed, const gapedit_index* index,
                                        gapedit_result* out);

/* Runs the reduced invariant suite. passed receives 1 or 0; report may be
   NULL. scratch_dir may be NULL. */
GAPEDIT_API gapedit_status gapedit_selftest(uint64_t seed, const char* scratch_dir, int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif
