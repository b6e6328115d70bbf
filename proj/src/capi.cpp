#include "hqcgmd.h"

#include <cmath>
#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>

#include "hqcgmd/analysis.hpp"
#include "hqcgmd/pipeline.hpp"

struct hqc_preset {
    hqc::HqcPreset preset;
};

struct hqc_stats {
    hqc::ChannelStats stats;
    int m = 0;
};

namespace {

template <typename Fn>
hqc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument&) {
        return HQC_ERR_INVALID;
    } catch (const std::domain_error&) {
        return HQC_ERR_INVALID;
    } catch (const std::bad_alloc&) {
        return HQC_ERR_INTERNAL;
    } catch (...) {
        return HQC_ERR_INTERNAL;
    }
}

std::vector<hqc::DecoderSpec> parse_decoder_list(const char* csv) {
    if (!csv) throw std::invalid_argument("decoder list is null");
    std::vector<hqc::DecoderSpec> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(hqc::DecoderSpec::parse(item));
    if (out.empty()) throw std::invalid_argument("decoder list is empty");
    return out;
}

}  // namespace

extern "C" {

const char* hqc_version(void) { return "0.1.0"; }

const char* hqc_error_string(hqc_status status) {
    switch (status) {
        case HQC_OK: return "ok";
        case HQC_ERR_INVALID: return "invalid argument";
        case HQC_ERR_RANGE: return "output buffer too small";
        case HQC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

hqc_status hqc_preset_open(const char* name, hqc_preset** out) {
    if (!name || !out) return HQC_ERR_INVALID;
    return guarded([&] {
        *out = new hqc_preset{hqc::HqcPreset::by_name(name)};
        return HQC_OK;
    });
}

hqc_status hqc_preset_open_custom(int n_rs, int k_rs, int m, hqc_preset** out) {
    if (!out) return HQC_ERR_INVALID;
    if (m < 1 || m > 5) return HQC_ERR_INVALID;
    return guarded([&] {
        *out = new hqc_preset{hqc::HqcPreset::custom(n_rs, k_rs, m)};
        return HQC_OK;
    });
}

void hqc_preset_close(hqc_preset* preset) { delete preset; }

hqc_status hqc_preset_params(const hqc_preset* preset, int* n_rs, int* k_rs, int* t,
                             int* m, long* n_ambient, long* payload_bits) {
    if (!preset) return HQC_ERR_INVALID;
    if (n_rs) *n_rs = preset->preset.rs.n;
    if (k_rs) *k_rs = preset->preset.rs.k;
    if (t) *t = preset->preset.rs.t;
    if (m) *m = preset->preset.rm.copies;
    if (n_ambient) *n_ambient = preset->preset.n;
    if (payload_bits) *payload_bits = preset->preset.payload_bits();
    return HQC_OK;
}

hqc_status hqc_smallest_prime_above(long x, long* out) {
    if (!out) return HQC_ERR_INVALID;
    return guarded([&] {
        *out = hqc::smallest_prime_above(x);
        return HQC_OK;
    });
}

hqc_status hqc_concat_encode(const hqc_preset* preset, const uint16_t* message,
                             uint8_t* bits) {
    if (!preset || !message || !bits) return HQC_ERR_INVALID;
    return guarded([&] {
        std::span<const hqc::Elem> msg(message, preset->preset.rs.k);
        for (hqc::Elem v : msg)
            if (v > 0xFF) throw std::invalid_argument("message symbol out of range");
        std::vector<uint8_t> payload = hqc::concat_encode(msg, preset->preset);
        std::memcpy(bits, payload.data(), payload.size());
        return HQC_OK;
    });
}

hqc_status hqc_apply_channel(const hqc_preset* preset, uint8_t* bits,
                             const char* channel_spec, uint64_t seed) {
    if (!preset || !bits || !channel_spec) return HQC_ERR_INVALID;
    return guarded([&] {
        hqc::ChannelModel model = hqc::ChannelModel::parse(channel_spec);
        std::vector<uint8_t> payload(bits, bits + preset->preset.payload_bits());
        std::mt19937_64 rng(hqc::shard_seed(seed, 0));
        hqc::apply_channel(payload, model, rng);
        std::memcpy(bits, payload.data(), payload.size());
        return HQC_OK;
    });
}

hqc_status hqc_concat_decode(const hqc_preset* preset, const uint8_t* bits,
                             const char* decoder_spec, uint16_t* message_out, int* ok,
                             int* trial_used) {
    if (!preset || !bits || !decoder_spec || !ok) return HQC_ERR_INVALID;
    return guarded([&] {
        hqc::DecoderSpec dec = hqc::DecoderSpec::parse(decoder_spec);
        std::span<const uint8_t> payload(bits,
                                         static_cast<size_t>(preset->preset.payload_bits()));
        hqc::DecodeOutcome outcome = hqc::concat_decode(payload, preset->preset, dec);
        *ok = outcome.ok ? 1 : 0;
        if (outcome.ok && message_out)
            for (int i = 0; i < preset->preset.rs.k; ++i)
                message_out[i] = outcome.message[i];
        if (trial_used) *trial_used = outcome.trial_used;
        return HQC_OK;
    });
}

hqc_status hqc_dfr_run(const hqc_preset* preset, const char* channel_spec,
                       const char* decoders_csv, long trials, uint64_t seed, int workers,
                       hqc_dfr_row* rows, size_t rows_cap, size_t* rows_len,
                       hqc_dfr_pairing* pairing) {
    if (!preset || !channel_spec || !rows || !rows_len) return HQC_ERR_INVALID;
    return guarded([&]() -> hqc_status {
        hqc::ChannelModel model = hqc::ChannelModel::parse(channel_spec);
        std::vector<hqc::DecoderSpec> decoders = parse_decoder_list(decoders_csv);
        if (decoders.size() > rows_cap) return HQC_ERR_RANGE;
        hqc::DfrReport report =
            hqc::monte_carlo_dfr(preset->preset, model, decoders, trials, seed, workers);
        *rows_len = report.rows.size();
        for (size_t i = 0; i < report.rows.size(); ++i) {
            const hqc::DfrRow& r = report.rows[i];
            std::snprintf(rows[i].decoder, sizeof rows[i].decoder, "%s", r.decoder.c_str());
            rows[i].failures = r.failures;
            rows[i].trials = r.trials;
            rows[i].dfr = r.dfr;
            rows[i].ci_low = r.ci_low;
            rows[i].ci_high = r.ci_high;
        }
        if (pairing) {
            pairing->hard_ok_erasure_fail = report.hard_ok_erasure_fail;
            pairing->hard_ok_gmd_fail = report.hard_ok_gmd_fail;
            pairing->erasure_ok_gmd_fail = report.erasure_ok_gmd_fail;
        }
        return HQC_OK;
    });
}

hqc_status hqc_stats_estimate(const char* channel_spec, int m, long samples, uint64_t seed,
                              int workers, int n_rs_ref, int t_max, hqc_stats** out) {
    if (!channel_spec || !out) return HQC_ERR_INVALID;
    if (m < 1 || m > 5) return HQC_ERR_INVALID;
    return guarded([&] {
        hqc::ChannelModel model = hqc::ChannelModel::parse(channel_spec);
        hqc::RmCode rm;
        rm.copies = m;
        hqc::ReliabilityHistogram hist =
            hqc::estimate_reliability_histogram(model, rm, samples, seed, workers);
        auto* handle = new hqc_stats;
        handle->stats = hqc::derive_channel_stats(hist, n_rs_ref, t_max);
        handle->m = m;
        *out = handle;
        return HQC_OK;
    });
}

void hqc_stats_close(hqc_stats* stats) { delete stats; }

hqc_status hqc_stats_entry(const hqc_stats* stats, int i, double* q, double* eps,
                           int* theta) {
    if (!stats) return HQC_ERR_INVALID;
    if (i < 0 || static_cast<size_t>(i) >= stats->stats.q.size()) return HQC_ERR_INVALID;
    if (q) *q = stats->stats.q[i];
    if (eps) *eps = stats->stats.eps[i];
    if (theta) *theta = stats->stats.theta[i];
    return HQC_OK;
}

hqc_status hqc_stats_quality(const hqc_stats* stats, int* ok) {
    if (!stats || !ok) return HQC_ERR_INVALID;
    *ok = stats->stats.quality_ok ? 1 : 0;
    return HQC_OK;
}

hqc_status hqc_bound_eval(const hqc_stats* stats, int n_rs, int k_rs,
                          double* per_trial_log2, size_t cap, size_t* len,
                          double* overall_log2) {
    if (!stats || !per_trial_log2 || !len || !overall_log2) return HQC_ERR_INVALID;
    return guarded([&]() -> hqc_status {
        hqc::RsCode code = hqc::RsCode::make(n_rs, k_rs);
        if (static_cast<size_t>(code.t + 1) > cap) return HQC_ERR_RANGE;
        hqc::BoundResult bound = hqc::gmd_bound(code, stats->stats);
        const double ln2 = std::log(2.0);
        *len = bound.per_trial_ln.size();
        for (size_t i = 0; i < bound.per_trial_ln.size(); ++i)
            per_trial_log2[i] = bound.per_trial_ln[i] / ln2;
        *overall_log2 = bound.overall_ln / ln2;
        return HQC_OK;
    });
}

}  // extern "C"
