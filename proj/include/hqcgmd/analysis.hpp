#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hqcgmd/pipeline.hpp"

namespace hqc {

// Least prime p > x such that 2 generates the multiplicative group mod p.
// This is the block-length rule behind the published parameter sets
// (17669, 35851, 57637, 13829); the primitivity condition is what makes
// X^p - 1 factor into exactly two irreducible polynomials over GF(2).
long smallest_prime_above(long x);

// D(x || y) = x ln(x/y) + (1-x) ln((1-x)/(1-y)), with 0 ln 0 = 0.
// Requires 0 <= x <= 1 and 0 < y < 1.
double kl_divergence(double x, double y);

// Histogram of single-symbol RM decoding experiments under a channel:
// counts of (max1 value, hard decision correct or not).
struct ReliabilityHistogram {
    std::vector<long> correct;  // indexed by max1, 0 .. 128*m
    std::vector<long> wrong;
    long samples = 0;
};

ReliabilityHistogram estimate_reliability_histogram(const ChannelModel& channel,
                                                    const RmCode& rm, long samples,
                                                    std::uint64_t seed, int workers);

// Empirical per-trial erasure statistics: q[i] = Pr(max1 > theta_i) and
// eps[i] = Pr(wrong | max1 > theta_i), where theta_i is the reliability
// threshold whose expected erasure fraction is closest to 2i/n_rs_ref
// (ties in |gap| keep the smaller threshold; symbols at the threshold are
// erased). Arrays run for i = 0 .. t_max so one estimate can feed bounds
// for several code lengths.
struct ChannelStats {
    std::vector<double> q;
    std::vector<double> eps;
    std::vector<int> theta;           // chosen thresholds, -1 erases nothing
    std::vector<double> eps_rule3;    // 3/N_outside fallback where eps == 0
    long samples = 0;
    bool quality_ok = true;           // false when some eps estimate had no support
};

ChannelStats derive_channel_stats(const ReliabilityHistogram& hist, int n_rs_ref, int t_max);

// ln of the per-trial failure bound exp(-n_rs q_i D((t-i)/(n_rs q_i) || eps_i)).
// Returns 0 (bound 1) in the vacuous regime (t-i)/(n_rs q_i) <= eps_i and
// -inf (bound 0) when eps_i = 0 with t > i or when t-i exceeds n_rs q_i.
double trial_bound_ln(int i, const RsCode& code, const ChannelStats& stats);

struct BoundResult {
    std::vector<double> per_trial_ln;  // i = 0 .. t
    double overall_ln = 0.0;           // min over trials
};

BoundResult gmd_bound(const RsCode& code, const ChannelStats& stats);

struct DfrRow {
    std::string decoder;
    long failures = 0;
    long trials = 0;
    double dfr = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

// Wilson 95% score interval for failures successes out of trials.
void wilson_ci(long failures, long trials, double* low, double* high);

struct DfrReport {
    std::vector<DfrRow> rows;  // one per requested decoder, input order
    // paired success-set bookkeeping: samples where the first decoder
    // succeeded but the second failed
    long hard_ok_erasure_fail = 0;
    long hard_ok_gmd_fail = 0;
    long erasure_ok_gmd_fail = 0;
};

// Runs the full pipeline `trials` times; every decoder sees the identical
// corrupted payload of each sample. Sharded so the counts are independent
// of the worker count.
DfrReport monte_carlo_dfr(const HqcPreset& preset, const ChannelModel& channel,
                          const std::vector<DecoderSpec>& decoders, long trials,
                          std::uint64_t seed, int workers);

// Empirical Pr(trial i fails) under threshold erasing: per word, n_rs
// independent symbol transmissions, symbols with max1 <= theta erased,
// failure when more than t-i survivors are wrong. This is the process the
// Chernoff/KL bound models.
double empirical_trial_failure(const ChannelModel& channel, const RmCode& rm,
                               const RsCode& code, int trial, int theta, long samples,
                               std::uint64_t seed, int workers);

// Deterministic per-shard stream: splitmix64 over (seed, shard).
std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard);

}  // namespace hqc
