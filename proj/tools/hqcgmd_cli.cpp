// Command-line front end: parameter reports, single round trips, Monte Carlo
// DFR sweeps, and Chernoff/KL bound sweeps. Talks to the library exclusively
// through the C API in hqcgmd.h.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hqcgmd.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitConfig = 2;

std::string fmt_double(double v) {
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct PresetFlags {
    std::string name;
    int n_rs = 0;
    int k_rs = 0;
    int m = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--preset", name, "named preset: hqc-128, hqc-192, hqc-256, gmd-128");
        cmd->add_option("--n-rs", n_rs, "custom RS codeword length");
        cmd->add_option("--k-rs", k_rs, "custom RS message length");
        cmd->add_option("--m", m, "custom RM repetition count");
    }

    hqc_preset* open() const {
        hqc_preset* p = nullptr;
        hqc_status st;
        if (!name.empty()) {
            st = hqc_preset_open(name.c_str(), &p);
        } else if (n_rs > 0) {
            st = hqc_preset_open_custom(n_rs, k_rs > 0 ? k_rs : 16, m > 0 ? m : 3, &p);
        } else {
            throw CLI::ValidationError("preset", "need --preset or --n-rs/--k-rs/--m");
        }
        if (st != HQC_OK)
            throw CLI::ValidationError("preset", hqc_error_string(st));
        return p;
    }

    json describe() const {
        json j;
        if (!name.empty()) j["preset"] = name;
        if (n_rs > 0) {
            j["n_rs"] = n_rs;
            j["k_rs"] = k_rs > 0 ? k_rs : 16;
            j["m"] = m > 0 ? m : 3;
        }
        return j;
    }
};

void print_preset_line(std::ostream& os, const std::string& label, hqc_preset* p) {
    int n_rs, k_rs, t, m;
    long n, payload;
    hqc_preset_params(p, &n_rs, &k_rs, &t, &m, &n, &payload);
    os << label << ": RS(" << n_rs << "," << k_rs << ") t=" << t << " m=" << m
       << " payload_bits=" << payload << " n=" << n << "\n";
}

int cmd_params(const PresetFlags& flags) {
    if (flags.name.empty() && flags.n_rs == 0) {
        for (const char* name : {"hqc-128", "hqc-192", "hqc-256", "gmd-128"}) {
            hqc_preset* p = nullptr;
            if (hqc_preset_open(name, &p) != HQC_OK) return kExitConfig;
            print_preset_line(std::cout, name, p);
            hqc_preset_close(p);
        }
        return 0;
    }
    hqc_preset* p = flags.open();
    print_preset_line(std::cout, flags.name.empty() ? "custom" : flags.name, p);
    hqc_preset_close(p);
    return 0;
}

int cmd_roundtrip(const PresetFlags& flags, const std::string& channel,
                  const std::string& decoder, std::uint64_t seed) {
    hqc_preset* p = flags.open();
    int n_rs, k_rs, t, m;
    long n, payload;
    hqc_preset_params(p, &n_rs, &k_rs, &t, &m, &n, &payload);

    std::mt19937_64 rng(seed);
    std::vector<uint16_t> message(k_rs);
    for (auto& v : message) v = static_cast<uint16_t>(rng() & 0xFF);
    std::vector<uint8_t> bits(payload);

    hqc_status st = hqc_concat_encode(p, message.data(), bits.data());
    if (st == HQC_OK) st = hqc_apply_channel(p, bits.data(), channel.c_str(), seed);
    std::vector<uint16_t> decoded(k_rs);
    int ok = 0, trial = -1;
    if (st == HQC_OK)
        st = hqc_concat_decode(p, bits.data(), decoder.c_str(), decoded.data(), &ok, &trial);
    hqc_preset_close(p);
    if (st != HQC_OK) {
        std::cerr << "roundtrip: " << hqc_error_string(st) << "\n";
        return kExitConfig;
    }

    bool match = ok && decoded == message;
    json report;
    report["config"] = {{"command", "roundtrip"}, {"channel", channel},
                        {"decoder", decoder}, {"seed", seed}};
    report["config"].update(flags.describe());
    report["version"] = hqc_version();
    report["decode_ok"] = ok != 0;
    report["message_match"] = match;
    report["trial_used"] = trial;
    std::cout << report.dump(2) << "\n";
    return match ? 0 : kExitVerification;
}

int cmd_dfr(const PresetFlags& flags, const std::vector<std::string>& channels,
            const std::string& decoders, long trials, std::uint64_t seed, int workers,
            const std::string& out_path) {
    hqc_preset* p = flags.open();
    int n_rs;
    hqc_preset_params(p, &n_rs, nullptr, nullptr, nullptr, nullptr, nullptr);

    std::string csv = "channel_param,decoder,n_rs,failures,trials,dfr,ci_low,ci_high,log2_dfr\n";
    json runs = json::array();
    for (const std::string& channel : channels) {
        hqc_dfr_row rows[32];
        size_t len = 0;
        hqc_dfr_pairing pairing{};
        hqc_status st = hqc_dfr_run(p, channel.c_str(), decoders.c_str(), trials, seed,
                                    workers, rows, 32, &len, &pairing);
        if (st != HQC_OK) {
            std::cerr << "dfr: " << hqc_error_string(st) << "\n";
            hqc_preset_close(p);
            return kExitConfig;
        }
        json jrun = {{"channel", channel},
                     {"pairing",
                      {{"hard_ok_erasure_fail", pairing.hard_ok_erasure_fail},
                       {"hard_ok_gmd_fail", pairing.hard_ok_gmd_fail},
                       {"erasure_ok_gmd_fail", pairing.erasure_ok_gmd_fail}}},
                     {"rows", json::array()}};
        for (size_t i = 0; i < len; ++i) {
            const hqc_dfr_row& r = rows[i];
            double log2_dfr = r.failures > 0 ? std::log2(r.dfr)
                                             : -std::numeric_limits<double>::infinity();
            csv += channel + "," + r.decoder + "," + std::to_string(n_rs) + "," +
                   std::to_string(r.failures) + "," + std::to_string(r.trials) + "," +
                   fmt_double(r.dfr) + "," + fmt_double(r.ci_low) + "," +
                   fmt_double(r.ci_high) + "," + fmt_double(log2_dfr) + "\n";
            jrun["rows"].push_back({{"decoder", r.decoder},
                                    {"failures", r.failures},
                                    {"trials", r.trials},
                                    {"dfr", r.dfr},
                                    {"ci_low", r.ci_low},
                                    {"ci_high", r.ci_high}});
        }
        runs.push_back(std::move(jrun));
    }
    hqc_preset_close(p);

    json summary;
    summary["config"] = {{"command", "dfr"},     {"channels", channels},
                         {"decoders", decoders}, {"trials", trials},
                         {"seed", seed},         {"workers", workers},
                         {"out", out_path}};
    summary["config"].update(flags.describe());
    summary["version"] = hqc_version();
    summary["note"] = "channel is a parameterized abstraction, not the HQC noise "
                      "distribution; DFR values are not certified HQC failure rates";
    summary["runs"] = runs;

    std::ofstream fcsv(out_path);
    fcsv << csv;
    if (!fcsv) {
        std::cerr << "dfr: cannot write " << out_path << "\n";
        return kExitConfig;
    }
    std::ofstream fjson(out_path + ".json");
    fjson << summary.dump(2) << "\n";
    std::cout << csv;
    return 0;
}

int cmd_bound(const std::string& channel, int m, long samples, int n_rs_ref, int k_rs,
              int n_rs_min, int n_rs_max, int n_rs_step, std::uint64_t seed, int workers,
              const std::string& out_path) {
    const int t_max = (n_rs_max - k_rs) / 2;
    hqc_stats* stats = nullptr;
    hqc_status st = hqc_stats_estimate(channel.c_str(), m, samples, seed, workers,
                                       n_rs_ref, t_max, &stats);
    if (st != HQC_OK) {
        std::cerr << "bound: " << hqc_error_string(st) << "\n";
        return kExitConfig;
    }
    int quality = 0;
    hqc_stats_quality(stats, &quality);

    std::string csv = "n_rs,trial,log2_bound\n";
    json sweep = json::array();
    json stats_json = json::array();
    for (int i = 0; i <= t_max; ++i) {
        double q, eps;
        int theta;
        hqc_stats_entry(stats, i, &q, &eps, &theta);
        stats_json.push_back({{"trial", i}, {"q", q}, {"eps", eps}, {"theta", theta}});
    }
    for (int n_rs = n_rs_min; n_rs <= n_rs_max; n_rs += n_rs_step) {
        std::vector<double> per_trial(static_cast<size_t>(t_max) + 1);
        size_t len = 0;
        double overall = 0;
        st = hqc_bound_eval(stats, n_rs, k_rs, per_trial.data(), per_trial.size(), &len,
                            &overall);
        if (st != HQC_OK) {
            std::cerr << "bound: n_rs=" << n_rs << ": " << hqc_error_string(st) << "\n";
            hqc_stats_close(stats);
            return kExitConfig;
        }
        for (size_t i = 0; i < len; ++i)
            csv += std::to_string(n_rs) + "," + std::to_string(i) + "," +
                   fmt_double(per_trial[i]) + "\n";
        csv += std::to_string(n_rs) + ",overall," + fmt_double(overall) + "\n";
        sweep.push_back({{"n_rs", n_rs}, {"overall_log2", overall}});
    }
    hqc_stats_close(stats);

    json summary;
    summary["config"] = {{"command", "bound"},   {"channel", channel},
                         {"m", m},               {"samples", samples},
                         {"n_rs_ref", n_rs_ref}, {"k_rs", k_rs},
                         {"n_rs_min", n_rs_min}, {"n_rs_max", n_rs_max},
                         {"n_rs_step", n_rs_step}, {"seed", seed},
                         {"workers", workers},   {"out", out_path}};
    summary["version"] = hqc_version();
    summary["stats_quality_ok"] = quality != 0;
    summary["stats"] = stats_json;
    summary["sweep"] = sweep;
    summary["note"] = "bounds are evaluated under the declared channel abstraction "
                      "and the threshold-erasure model; log2 scale";

    std::ofstream fcsv(out_path);
    fcsv << csv;
    if (!fcsv) {
        std::cerr << "bound: cannot write " << out_path << "\n";
        return kExitConfig;
    }
    std::ofstream fjson(out_path + ".json");
    fjson << summary.dump(2) << "\n";
    std::cout << csv;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concatenated RM+RS decoder toolkit"};
    app.require_subcommand(1);

    PresetFlags params_flags;
    CLI::App* params = app.add_subcommand("params", "report code parameters");
    params_flags.attach(params);

    PresetFlags rt_flags;
    std::string rt_channel = "bernoulli:0";
    std::string rt_decoder = "gmd";
    std::uint64_t rt_seed = 1;
    CLI::App* roundtrip = app.add_subcommand("roundtrip", "encode, corrupt, decode once");
    rt_flags.attach(roundtrip);
    roundtrip->add_option("--channel", rt_channel, "bernoulli:<p> or fixed:<w>");
    roundtrip->add_option("--decoder", rt_decoder, "hard|erasure|chase:<eta>|gmd");
    roundtrip->add_option("--seed", rt_seed, "RNG seed");

    PresetFlags dfr_flags;
    std::vector<std::string> dfr_channels;
    std::string dfr_decoders = "hard,erasure,chase:3,gmd";
    long dfr_trials = 10000;
    std::uint64_t dfr_seed = 1;
    int dfr_workers = 0;
    std::string dfr_out = "dfr.csv";
    CLI::App* dfr = app.add_subcommand("dfr", "Monte Carlo decoding-failure-rate run");
    dfr_flags.attach(dfr);
    dfr->add_option("--channel", dfr_channels, "channel spec, repeatable for a sweep")
        ->required();
    dfr->add_option("--decoders", dfr_decoders, "comma-separated decoder specs");
    dfr->add_option("--trials", dfr_trials, "samples per channel point");
    dfr->add_option("--seed", dfr_seed, "RNG seed");
    dfr->add_option("--workers", dfr_workers, "worker threads (0 = auto)");
    dfr->add_option("--out", dfr_out, "CSV output path (JSON summary at <out>.json)");

    std::string b_channel;
    int b_m = 3;
    long b_samples = 200000;
    int b_n_rs_ref = 36, b_k_rs = 16, b_min = 18, b_max = 46, b_step = 2;
    std::uint64_t b_seed = 1;
    int b_workers = 0;
    std::string b_out = "bound.csv";
    CLI::App* bound = app.add_subcommand("bound", "Chernoff/KL failure-bound sweep");
    bound->add_option("--channel", b_channel, "channel spec")->required();
    bound->add_option("--m", b_m, "RM repetition count");
    bound->add_option("--samples", b_samples, "single-symbol samples for stats");
    bound->add_option("--n-rs-ref", b_n_rs_ref, "n_rs used for erasure quantiles");
    bound->add_option("--k-rs", b_k_rs, "RS message length");
    bound->add_option("--n-rs-min", b_min, "sweep start");
    bound->add_option("--n-rs-max", b_max, "sweep end (inclusive)");
    bound->add_option("--n-rs-step", b_step, "sweep step");
    bound->add_option("--seed", b_seed, "RNG seed");
    bound->add_option("--workers", b_workers, "worker threads (0 = auto)");
    bound->add_option("--out", b_out, "CSV output path (JSON summary at <out>.json)");

    try {
        app.parse(argc, argv);
        if (params->parsed()) return cmd_params(params_flags);
        if (roundtrip->parsed())
            return cmd_roundtrip(rt_flags, rt_channel, rt_decoder, rt_seed);
        if (dfr->parsed())
            return cmd_dfr(dfr_flags, dfr_channels, dfr_decoders, dfr_trials, dfr_seed,
                           dfr_workers, dfr_out);
        if (bound->parsed())
            return cmd_bound(b_channel, b_m, b_samples, b_n_rs_ref, b_k_rs, b_min, b_max,
                             b_step, b_seed, b_workers, b_out);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
