#ifndef PQCLAB_PQCLAB_H
#define PQCLAB_PQCLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(PQCLAB_BUILDING_LIBRARY)
#define PQCLAB_API __attribute__((visibility("default")))
#else
#define PQCLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Status codes. The numeric values of USAGE, DECODING_FAILURE and IO are the
 * process exit codes used by the command-line tool.
 */
typedef enum pqclab_status {
  PQCLAB_OK = 0,
  PQCLAB_INVALID_ARGUMENT = 1,
  PQCLAB_USAGE = 2,
  PQCLAB_DECODING_FAILURE = 3,
  PQCLAB_IO = 4,
  PQCLAB_FORMAT = 5,
  PQCLAB_BUFFER_TOO_SMALL = 6,
  PQCLAB_SINGULAR = 7,
  PQCLAB_SELFTEST_FAILED = 8,
  PQCLAB_INTERNAL = 9
} pqclab_status;

typedef enum pqclab_scheme {
  PQCLAB_SCHEME_ANY = 0,
  PQCLAB_SCHEME_KYBER = 1,
  PQCLAB_SCHEME_MCELIECE = 2
} pqclab_scheme;

/* McEliece public-key form. Ignored for Kyber. */
typedef enum pqclab_variant {
  PQCLAB_VARIANT_TEXTBOOK = 0,
  PQCLAB_VARIANT_SYSTEMATIC = 1
} pqclab_variant;

typedef enum pqclab_report_format {
  PQCLAB_REPORT_CSV = 0,
  PQCLAB_REPORT_JSON = 1,
  PQCLAB_REPORT_MARKDOWN = 2,
  PQCLAB_REPORT_FIGURE2 = 3, /* key size series */
  PQCLAB_REPORT_FIGURE3 = 4, /* FLOP count series */
  PQCLAB_REPORT_FIGURE4 = 5  /* ciphertext size series */
} pqclab_report_format;

typedef struct pqclab_public_key pqclab_public_key;
typedef struct pqclab_secret_key pqclab_secret_key;
typedef struct pqclab_report pqclab_report;

#define PQCLAB_SEED_BYTES 32
#define PQCLAB_HEADER_BYTES 8

typedef struct pqclab_key_info {
  pqclab_scheme scheme;
  pqclab_variant variant;
  char level[32];          /* "kyber512", "mceliece348864", "toy16", ... */
  size_t public_key_bytes; /* raw encodings, without file header */
  size_t secret_key_bytes;
  size_t message_bytes;    /* 32 for Kyber, ceil(k / 8) for McEliece */
  size_t message_bits;     /* 256 for Kyber, k for McEliece */
  size_t ciphertext_bytes;
} pqclab_key_info;

PQCLAB_API const char* pqclab_version(void);
PQCLAB_API const char* pqclab_status_string(pqclab_status status);
/* Message describing the most recent failure on the calling thread. */
PQCLAB_API const char* pqclab_last_error(void);

/* Parses 64 hex digits into a seed. */
PQCLAB_API pqclab_status pqclab_seed_from_hex(const char* hex, uint8_t seed[PQCLAB_SEED_BYTES]);

/*
 * Level names are accepted with or without the scheme prefix ("512",
 * "kyber512", "348864", "toy16"). `seed` may be NULL for fresh randomness.
 * `threads` sets the worker count for the McEliece matrix product and never
 * changes the output.
 */
PQCLAB_API pqclab_status pqclab_keygen(pqclab_scheme scheme, const char* level, pqclab_variant variant,
                                       const uint8_t* seed, unsigned threads, pqclab_public_key** pk,
                                       pqclab_secret_key** sk);

PQCLAB_API void pqclab_public_key_free(pqclab_public_key* pk);
PQCLAB_API void pqclab_secret_key_free(pqclab_secret_key* sk);

PQCLAB_API pqclab_status pqclab_public_key_info(const pqclab_public_key* pk, pqclab_key_info* info);
PQCLAB_API pqclab_status pqclab_secret_key_info(const pqclab_secret_key* sk, pqclab_key_info* info);

/*
 * Export functions follow the two-call pattern: with `out` NULL (or `*len`
 * too small) the required size is stored in `*len` and PQCLAB_BUFFER_TOO_SMALL
 * is returned unless `out` was NULL, in which case PQCLAB_OK is returned.
 */
PQCLAB_API pqclab_status pqclab_public_key_export(const pqclab_public_key* pk, int with_header, uint8_t* out,
                                                  size_t* len);
PQCLAB_API pqclab_status pqclab_secret_key_export(const pqclab_secret_key* sk, int with_header, uint8_t* out,
                                                  size_t* len);

/*
 * Imports accept framed files directly. Raw encodings need the scheme and
 * level (and variant for McEliece) as hints; hints are checked against the
 * header when both are present.
 */
PQCLAB_API pqclab_status pqclab_public_key_import(const uint8_t* data, size_t len, pqclab_scheme scheme_hint,
                                                  const char* level_hint, pqclab_variant variant_hint,
                                                  pqclab_public_key** pk);
PQCLAB_API pqclab_status pqclab_secret_key_import(const uint8_t* data, size_t len, pqclab_scheme scheme_hint,
                                                  const char* level_hint, pqclab_variant variant_hint,
                                                  pqclab_secret_key** sk);

/*
 * `message_len` must equal info.message_bytes; McEliece pad bits must be zero.
 * `coins` may be NULL for fresh randomness. Two-call pattern on `ct`.
 */
PQCLAB_API pqclab_status pqclab_encrypt(const pqclab_public_key* pk, const uint8_t* message, size_t message_len,
                                        const uint8_t* coins, int with_header, uint8_t* ct, size_t* ct_len);
/* Accepts framed or raw ciphertexts. Two-call pattern on `message`. */
PQCLAB_API pqclab_status pqclab_decrypt(const pqclab_secret_key* sk, const uint8_t* ct, size_t ct_len,
                                        uint8_t* message, size_t* message_len);

typedef struct pqclab_analyze_options {
  pqclab_scheme scheme;   /* PQCLAB_SCHEME_ANY for both */
  const char* levels;     /* comma-separated, NULL or "" for the standard levels */
  int measured;
  unsigned trials;
  const uint8_t* seed;    /* NULL: all-zero seed */
  unsigned threads;
  pqclab_variant variant; /* McEliece key form used for measured rows */
} pqclab_analyze_options;

PQCLAB_API void pqclab_analyze_options_init(pqclab_analyze_options* options);
PQCLAB_API pqclab_status pqclab_analyze(const pqclab_analyze_options* options, pqclab_report** report);
PQCLAB_API void pqclab_report_free(pqclab_report* report);
/* Number of rows whose measurement failed. */
PQCLAB_API size_t pqclab_report_error_count(const pqclab_report* report);
/* Renders a NUL-terminated document; `*len` includes the terminator. */
PQCLAB_API pqclab_status pqclab_report_render(const pqclab_report* report, pqclab_report_format format, char* out,
                                              size_t* len);

/*
 * Runs the built-in checks and writes one "PASS name" / "FAIL name: detail"
 * line per check. Returns PQCLAB_SELFTEST_FAILED if any check fails.
 * `inject_fault` corrupts an expected constant.
 */
PQCLAB_API pqclab_status pqclab_selftest(int quick, int inject_fault, char* out, size_t* len);

typedef struct pqclab_bench_result {
  size_t rows;
  size_t inner;
  size_t cols;
  unsigned threads;
  double sequential_ns; /* median over repetitions */
  double parallel_ns;
  double speedup;
  uint64_t word_ops;    /* per product */
  int identical;        /* parallel product equals sequential product */
} pqclab_bench_result;

/* Times a random (rows x inner) * (inner x cols) GF(2) product. */
PQCLAB_API pqclab_status pqclab_bench_gf2_mul(size_t rows, size_t inner, size_t cols, unsigned threads,
                                              unsigned repetitions, const uint8_t* seed,
                                              pqclab_bench_result* result);

#ifdef __cplusplus
}
#endif

#endif
