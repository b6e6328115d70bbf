#ifndef HQCGMD_H
#define HQCGMD_H

/* C interface to the concatenated RM+RS decoder library. All functions
 * return a status code; results come back through out-parameters. Handles
 * are opaque and must be released with the matching close function. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    HQC_OK = 0,
    HQC_ERR_INVALID = 1, /* bad argument, spec string, or preset name */
    HQC_ERR_RANGE = 2,   /* output buffer too small */
    HQC_ERR_INTERNAL = 3
} hqc_status;

const char* hqc_version(void);
const char* hqc_error_string(hqc_status status);

/* ---- presets ---- */

typedef struct hqc_preset hqc_preset;

/* Known names: hqc-128, hqc-192, hqc-256, gmd-128. */
hqc_status hqc_preset_open(const char* name, hqc_preset** out);
hqc_status hqc_preset_open_custom(int n_rs, int k_rs, int m, hqc_preset** out);
void hqc_preset_close(hqc_preset* preset);

/* Any out-pointer may be NULL if the caller does not need that field. */
hqc_status hqc_preset_params(const hqc_preset* preset, int* n_rs, int* k_rs, int* t,
                             int* m, long* n_ambient, long* payload_bits);

/* Least prime p > x with 2 generating the multiplicative group mod p (the
 * rule behind the published ambient block lengths). */
hqc_status hqc_smallest_prime_above(long x, long* out);

/* ---- single-shot pipeline ---- */

/* message: k_rs symbols, each in [0, 255]; bits: payload_bits entries of 0/1. */
hqc_status hqc_concat_encode(const hqc_preset* preset, const uint16_t* message,
                             uint8_t* bits);

/* channel_spec: "bernoulli:<p>" or "fixed:<w>"; corruption in place. */
hqc_status hqc_apply_channel(const hqc_preset* preset, uint8_t* bits,
                             const char* channel_spec, uint64_t seed);

/* decoder_spec: "hard", "erasure", "chase:<eta>", or "gmd". On HQC_OK, *ok
 * tells whether decoding succeeded; message_out (k_rs symbols) and
 * *trial_used are filled only when *ok is nonzero. A decode failure is a
 * reported value, not an error status. */
hqc_status hqc_concat_decode(const hqc_preset* preset, const uint8_t* bits,
                             const char* decoder_spec, uint16_t* message_out, int* ok,
                             int* trial_used);

/* ---- Monte Carlo DFR ---- */

typedef struct {
    char decoder[16];
    long failures;
    long trials;
    double dfr;
    double ci_low;  /* Wilson 95% */
    double ci_high;
} hqc_dfr_row;

/* Counts of samples breaking the expected success-set nesting. */
typedef struct {
    long hard_ok_erasure_fail;
    long hard_ok_gmd_fail;
    long erasure_ok_gmd_fail;
} hqc_dfr_pairing;

/* decoders_csv: comma-separated decoder specs, e.g. "hard,erasure,gmd".
 * Every decoder sees the identical corrupted payloads. Results are
 * independent of the worker count (workers <= 0 picks a default). */
hqc_status hqc_dfr_run(const hqc_preset* preset, const char* channel_spec,
                       const char* decoders_csv, long trials, uint64_t seed, int workers,
                       hqc_dfr_row* rows, size_t rows_cap, size_t* rows_len,
                       hqc_dfr_pairing* pairing);

/* ---- channel statistics and DFR bounds ---- */

typedef struct hqc_stats hqc_stats;

/* Estimates per-trial erasure statistics (q_i, eps_i) for i = 0..t_max from
 * `samples` single-symbol experiments with m RM codeword copies; the
 * erasure thresholds target fraction 2i/n_rs_ref. */
hqc_status hqc_stats_estimate(const char* channel_spec, int m, long samples, uint64_t seed,
                              int workers, int n_rs_ref, int t_max, hqc_stats** out);
void hqc_stats_close(hqc_stats* stats);

hqc_status hqc_stats_entry(const hqc_stats* stats, int i, double* q, double* eps,
                           int* theta);

/* *ok is 0 when some eps_i estimate had no error mass (rates then report 0
 * with only a rule-of-three ceiling). */
hqc_status hqc_stats_quality(const hqc_stats* stats, int* ok);

/* Per-trial Chernoff/KL failure bounds, log2 scale, for an RS(n_rs, k_rs)
 * outer code; per_trial_log2 needs room for t+1 entries. overall_log2 is
 * the minimum over trials. Entries can be -inf (bound 0) or 0 (vacuous). */
hqc_status hqc_bound_eval(const hqc_stats* stats, int n_rs, int k_rs,
                          double* per_trial_log2, size_t cap, size_t* len,
                          double* overall_log2);

#ifdef __cplusplus
}
#endif

#endif /* HQCGMD_H */
