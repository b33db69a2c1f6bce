/* Copyright 2026 The sdsc Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/* C interface to the polar codec and symbol-decision SC simulator.
 *
 * Objects are opaque handles created by *_create / *_construct / *_load and
 * released with the matching *_free. Every fallible call returns an
 * sdsc_status; on failure sdsc_last_error() holds a message for the calling
 * thread. Index values (information set entries) are 1-based; arrays of bits
 * or LLRs are position-indexed with element 0 holding u_1 / x_1.
 *
 * String outputs use a query protocol: pass buf = NULL to learn the required
 * size (including the terminating NUL) through *needed.
 */

#ifndef SDSC_SDSC_H
#define SDSC_SDSC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SDSC_BUILDING_LIBRARY)
#    define SDSC_API __declspec(dllexport)
#  else
#    define SDSC_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) && __GNUC__ >= 4
#  define SDSC_API __attribute__((visibility("default")))
#else
#  define SDSC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdsc_status {
  SDSC_OK = 0,
  SDSC_E_PARAM = 1,    /* invalid construction or channel parameter */
  SDSC_E_INPUT = 2,    /* malformed bits, observation or file content */
  SDSC_E_CONFIG = 3,   /* decoder or simulation configuration */
  SDSC_E_GUARD = 4,    /* exhaustive ML refused: dimension too large */
  SDSC_E_IO = 5,
  SDSC_E_INTERNAL = 6,
  SDSC_E_BUFFER = 7,   /* output buffer too small */
  SDSC_E_NULL = 8      /* required pointer argument was NULL */
} sdsc_status;

typedef enum sdsc_channel_kind { SDSC_BEC = 0, SDSC_AWGN = 1 } sdsc_channel_kind;
typedef enum sdsc_f_rule { SDSC_F_EXACT = 0, SDSC_F_MINSUM = 1 } sdsc_f_rule;
typedef enum sdsc_tie_break { SDSC_TIE_LEXMIN = 0, SDSC_TIE_ZERO = 1 } sdsc_tie_break;
typedef enum sdsc_decoder_kind { SDSC_DECODER_SC = 0, SDSC_DECODER_ML = 1 } sdsc_decoder_kind;

typedef struct sdsc_code sdsc_code;
typedef struct sdsc_decoder sdsc_decoder;
typedef struct sdsc_sim_result sdsc_sim_result;

SDSC_API const char* sdsc_last_error(void);
SDSC_API const char* sdsc_status_string(sdsc_status status);

/* Codes ------------------------------------------------------------------ */

/* design: erasure probability for SDSC_BEC, linear Es/N0 for SDSC_AWGN. */
SDSC_API sdsc_status sdsc_code_construct(unsigned n, size_t k, sdsc_channel_kind kind, double design,
                                         sdsc_code** out);
SDSC_API sdsc_status sdsc_code_from_info_set(size_t length, const uint32_t* info_set, size_t k,
                                             sdsc_code** out);
SDSC_API sdsc_status sdsc_code_parse(const char* text, sdsc_code** out);
SDSC_API sdsc_status sdsc_code_load(const char* path, sdsc_code** out);
SDSC_API sdsc_status sdsc_code_save(const sdsc_code* code, const char* path);
SDSC_API sdsc_status sdsc_code_text(const sdsc_code* code, char* buf, size_t capacity, size_t* needed);
SDSC_API void sdsc_code_free(sdsc_code* code);

SDSC_API size_t sdsc_code_length(const sdsc_code* code);
SDSC_API size_t sdsc_code_dimension(const sdsc_code* code);
/* Copies the K sorted 1-based information indices. */
SDSC_API sdsc_status sdsc_code_info_set(const sdsc_code* code, uint32_t* out, size_t capacity);

/* x = u B_N F^(x)n; u must have zeros on frozen positions. */
SDSC_API sdsc_status sdsc_encode(const sdsc_code* code, const uint8_t* u, size_t length, uint8_t* x);

/* Decoding --------------------------------------------------------------- */

typedef struct sdsc_decoder_config {
  sdsc_decoder_kind kind;
  size_t symbol_size; /* SC only: 1 = bit decisions, must divide N */
  sdsc_f_rule f_rule;
  sdsc_tie_break tie_break;
} sdsc_decoder_config;

SDSC_API void sdsc_decoder_config_init(sdsc_decoder_config* cfg);

typedef struct sdsc_decode_info {
  size_t tied_symbols;
  int contradiction;
} sdsc_decode_info;

SDSC_API sdsc_status sdsc_decoder_create(const sdsc_code* code, const sdsc_decoder_config* cfg,
                                         sdsc_decoder** out);
SDSC_API void sdsc_decoder_free(sdsc_decoder* decoder);
/* info may be NULL. */
SDSC_API sdsc_status sdsc_decode(sdsc_decoder* decoder, const double* llr, size_t length, uint8_t* u_hat,
                                 sdsc_decode_info* info);

/* Reads one LLR per line (inf, -inf or numerals). Release with sdsc_llr_free. */
SDSC_API sdsc_status sdsc_observation_load(const char* path, double** llr, size_t* length);
SDSC_API sdsc_status sdsc_observation_parse(const char* text, double** llr, size_t* length);
SDSC_API void sdsc_llr_free(double* llr);

/* Data patterns ---------------------------------------------------------- */

SDSC_API sdsc_status sdsc_patterns_count_dp2(const sdsc_code* code, size_t symbol_size, size_t* dp2,
                                             size_t* total);
/* buf receives the M-character D/F string of symbol j plus a NUL. */
SDSC_API sdsc_status sdsc_pattern_get(const sdsc_code* code, size_t symbol_size, size_t j, char* buf,
                                      size_t capacity, int* is_dp2);

/* Simulation ------------------------------------------------------------- */

typedef struct sdsc_sim_decoder {
  size_t symbol_size;
  sdsc_f_rule f_rule;
  sdsc_tie_break tie_break;
} sdsc_sim_decoder;

typedef struct sdsc_sim_plan {
  unsigned n;
  size_t k;
  sdsc_channel_kind construction;
  double design;
  sdsc_channel_kind channel;
  const double* params;
  size_t num_params;
  const sdsc_sim_decoder* decoders;
  size_t num_decoders;
  uint64_t max_frames;
  uint64_t min_frame_errors; /* 0 disables early stopping */
  uint64_t seed;
  unsigned workers; /* 0 = hardware concurrency */
} sdsc_sim_plan;

typedef struct sdsc_sim_record {
  double param;
  size_t symbol_size;
  uint64_t frames;
  uint64_t bit_errors;
  uint64_t frame_errors;
  double ber;
  double fer;
  double fer_ci_low;
  double fer_ci_high;
  uint64_t tie_frames;
  uint64_t obs_checksum;
} sdsc_sim_record;

SDSC_API sdsc_status sdsc_simulate(const sdsc_sim_plan* plan, sdsc_sim_result** out);
SDSC_API void sdsc_sim_result_free(sdsc_sim_result* result);
SDSC_API size_t sdsc_sim_result_num_records(const sdsc_sim_result* result);
SDSC_API sdsc_status sdsc_sim_result_record(const sdsc_sim_result* result, size_t index, sdsc_sim_record* out);
SDSC_API sdsc_status sdsc_sim_result_csv(const sdsc_sim_result* result, char* buf, size_t capacity,
                                         size_t* needed);
SDSC_API sdsc_status sdsc_sim_result_write_csv(const sdsc_sim_result* result, const char* path);
/* Paired ordering verdicts at 4 sigma, one line each. *violations may be NULL. */
SDSC_API sdsc_status sdsc_sim_result_report(const sdsc_sim_result* result, char* buf, size_t capacity,
                                            size_t* needed, size_t* violations);

#ifdef __cplusplus
}
#endif

#endif /* SDSC_SDSC_H */
