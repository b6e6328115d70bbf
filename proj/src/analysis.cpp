#include "hqcgmd/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace hqc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_prime(long x) {
    if (x < 2) return false;
    for (long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

long pow_mod(long base, long exp, long mod) {
    long r = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

bool two_is_primitive_root(long p) {
    long phi = p - 1;
    long rest = phi;
    for (long d = 2; d * d <= rest; ++d) {
        if (rest % d != 0) continue;
        if (pow_mod(2, phi / d, p) == 1) return false;
        while (rest % d == 0) rest /= d;
    }
    if (rest > 1 && pow_mod(2, phi / rest, p) == 1) return false;
    return true;
}

// Run fn(shard) for shard = 0 .. shards-1 on `workers` threads. Each shard
// writes only its own output slot, so results never depend on the schedule.
template <typename Fn>
void run_sharded(long shards, int workers, Fn&& fn) {
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
    workers = static_cast<int>(std::min<long>(workers, shards));
    if (workers <= 1) {
        for (long s = 0; s < shards; ++s) fn(s);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                long s = next.fetch_add(1);
                if (s >= shards) break;
                fn(s);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

long smallest_prime_above(long x) {
    if (x < 2) throw std::invalid_argument("smallest_prime_above: x >= 2 required");
    for (long p = x + 1;; ++p)
        if (is_prime(p) && two_is_primitive_root(p)) return p;
}

double kl_divergence(double x, double y) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("kl: x must be in [0, 1]");
    if (!(y > 0.0 && y < 1.0)) throw std::domain_error("kl: y must be in (0, 1)");
    double d = 0.0;
    if (x > 0.0) d += x * std::log(x / y);
    if (x < 1.0) d += (1.0 - x) * std::log((1.0 - x) / (1.0 - y));
    return d;
}

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) {
    // splitmix64 over the combined state
    std::uint64_t z = seed + shard * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ReliabilityHistogram estimate_reliability_histogram(const ChannelModel& channel,
                                                    const RmCode& rm, long samples,
                                                    std::uint64_t seed, int workers) {
    if (samples <= 0) throw std::invalid_argument("stats: samples must be positive");
    const int hist_size = 128 * rm.copies + 1;
    constexpr long kShardSize = 8192;
    const long shards = (samples + kShardSize - 1) / kShardSize;
    std::vector<ReliabilityHistogram> partial(shards);

    run_sharded(shards, workers, [&](long s) {
        ReliabilityHistogram h;
        h.correct.assign(hist_size, 0);
        h.wrong.assign(hist_size, 0);
        std::mt19937_64 rng(shard_seed(seed, static_cast<std::uint64_t>(s)));
        const long count = std::min(kShardSize, samples - s * kShardSize);
        std::vector<std::uint8_t> bits(static_cast<size_t>(128) * rm.copies);
        for (long it = 0; it < count; ++it) {
            std::uint8_t symbol = static_cast<std::uint8_t>(rng() & 0xFF);
            rm_encode(symbol, rm, bits.data());
            apply_channel(bits, channel, rng);
            SoftSymbol soft = rm_decode(bits, rm);
            if (soft.best == symbol)
                ++h.correct[soft.max1];
            else
                ++h.wrong[soft.max1];
            ++h.samples;
        }
        partial[s] = std::move(h);
    });

    ReliabilityHistogram total;
    total.correct.assign(hist_size, 0);
    total.wrong.assign(hist_size, 0);
    for (const auto& h : partial) {
        for (int v = 0; v < hist_size; ++v) {
            total.correct[v] += h.correct[v];
            total.wrong[v] += h.wrong[v];
        }
        total.samples += h.samples;
    }
    return total;
}

ChannelStats derive_channel_stats(const ReliabilityHistogram& hist, int n_rs_ref, int t_max) {
    if (hist.samples <= 0) throw std::invalid_argument("stats: empty histogram");
    if (n_rs_ref <= 0 || t_max < 0 || 2 * t_max > n_rs_ref)
        throw std::invalid_argument("stats: need 0 <= 2*t_max <= n_rs_ref");
    const int hist_size = static_cast<int>(hist.correct.size());
    const double n = static_cast<double>(hist.samples);

    // cumulative counts of symbols with max1 <= v
    std::vector<long> cum_all(hist_size), cum_wrong(hist_size);
    long acc_all = 0, acc_wrong = 0, total_wrong = 0;
    for (int v = 0; v < hist_size; ++v) {
        acc_all += hist.correct[v] + hist.wrong[v];
        acc_wrong += hist.wrong[v];
        cum_all[v] = acc_all;
        cum_wrong[v] = acc_wrong;
    }
    total_wrong = acc_wrong;

    ChannelStats st;
    st.samples = hist.samples;
    for (int i = 0; i <= t_max; ++i) {
        const double target = 2.0 * i / n_rs_ref * n;
        int best_theta = -1;
        long best_erased = 0;
        double best_gap = std::abs(0.0 - target);
        for (int v = 0; v < hist_size; ++v) {
            double gap = std::abs(static_cast<double>(cum_all[v]) - target);
            if (gap < best_gap) {
                best_gap = gap;
                best_theta = v;
                best_erased = cum_all[v];
            }
        }
        const long outside = hist.samples - best_erased;
        const long wrong_outside = total_wrong - (best_theta < 0 ? 0 : cum_wrong[best_theta]);
        st.theta.push_back(best_theta);
        if (outside <= 0) {
            st.q.push_back(0.0);
            st.eps.push_back(0.0);
            st.eps_rule3.push_back(1.0);
            st.quality_ok = false;
            continue;
        }
        st.q.push_back(static_cast<double>(outside) / n);
        st.eps.push_back(static_cast<double>(wrong_outside) / outside);
        st.eps_rule3.push_back(wrong_outside > 0 ? st.eps.back() : 3.0 / outside);
        if (wrong_outside == 0) st.quality_ok = false;
    }
    return st;
}

double trial_bound_ln(int i, const RsCode& code, const ChannelStats& stats) {
    if (i < 0 || i > code.t) throw std::invalid_argument("bound: trial index out of range");
    if (static_cast<size_t>(i) >= stats.q.size())
        throw std::invalid_argument("bound: stats do not cover the trial index");
    const double q = stats.q[i];
    const double eps = stats.eps[i];
    if (q <= 0.0) return -kInf;  // every symbol erased: no survivor can be wrong
    const double nq = code.n * q;
    const double x = (code.t - i) / nq;
    if (eps <= 0.0) return -kInf;
    if (x >= 1.0) return -kInf;  // more errors needed than survivors exist
    if (x <= eps) return 0.0;    // past the mean: the bound is vacuous
    return -nq * kl_divergence(x, eps);
}

BoundResult gmd_bound(const RsCode& code, const ChannelStats& stats) {
    BoundResult r;
    r.overall_ln = kInf;
    for (int i = 0; i <= code.t; ++i) {
        double ln_b = trial_bound_ln(i, code, stats);
        r.per_trial_ln.push_back(ln_b);
        r.overall_ln = std::min(r.overall_ln, ln_b);
    }
    return r;
}

void wilson_ci(long failures, long trials, double* low, double* high) {
    if (trials <= 0) throw std::invalid_argument("wilson: trials must be positive");
    const double z = 1.959963984540054;  // 95% two-sided
    const double nd = static_cast<double>(trials);
    const double phat = static_cast<double>(failures) / nd;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nd;
    const double center = phat + z2 / (2.0 * nd);
    const double spread = z * std::sqrt(phat * (1.0 - phat) / nd + z2 / (4.0 * nd * nd));
    *low = failures == 0 ? 0.0 : std::max(0.0, (center - spread) / denom);
    *high = failures == trials ? 1.0 : std::min(1.0, (center + spread) / denom);
}

DfrReport monte_carlo_dfr(const HqcPreset& preset, const ChannelModel& channel,
                          const std::vector<DecoderSpec>& decoders, long trials,
                          std::uint64_t seed, int workers) {
    if (trials <= 0) throw std::invalid_argument("dfr: trials must be positive");
    if (decoders.empty()) throw std::invalid_argument("dfr: no decoders selected");
    const size_t nd = decoders.size();
    int idx_hard = -1, idx_erasure = -1, idx_gmd = -1;
    for (size_t d = 0; d < nd; ++d) {
        if (decoders[d].kind == DecoderSpec::Kind::hard) idx_hard = static_cast<int>(d);
        if (decoders[d].kind == DecoderSpec::Kind::erasure) idx_erasure = static_cast<int>(d);
        if (decoders[d].kind == DecoderSpec::Kind::gmd) idx_gmd = static_cast<int>(d);
    }

    struct ShardCounts {
        std::vector<long> failures;
        long hard_ok_erasure_fail = 0;
        long hard_ok_gmd_fail = 0;
        long erasure_ok_gmd_fail = 0;
    };
    constexpr long kShardSize = 512;
    const long shards = (trials + kShardSize - 1) / kShardSize;
    std::vector<ShardCounts> partial(shards);

    run_sharded(shards, workers, [&](long s) {
        ShardCounts c;
        c.failures.assign(nd, 0);
        std::mt19937_64 rng(shard_seed(seed, static_cast<std::uint64_t>(s)));
        const long count = std::min(kShardSize, trials - s * kShardSize);
        std::vector<Elem> message(preset.rs.k);
        std::vector<char> ok(nd);
        for (long it = 0; it < count; ++it) {
            for (auto& m : message) m = static_cast<Elem>(rng() & 0xFF);
            std::vector<std::uint8_t> bits = concat_encode(message, preset);
            apply_channel(bits, channel, rng);
            std::vector<SoftSymbol> soft = concat_soft_decode(bits, preset);
            std::vector<Elem> word(preset.rs.n);
            for (int j = 0; j < preset.rs.n; ++j) word[j] = soft[j].best;
            for (size_t d = 0; d < nd; ++d) {
                DecodeOutcome out;
                switch (decoders[d].kind) {
                    case DecoderSpec::Kind::hard:
                        out = hard_decode(word, preset.rs);
                        break;
                    case DecoderSpec::Kind::erasure:
                        out = erasure_only_decode(
                            word, ReliabilityOrder::from_soft(soft, preset.rs), preset.rs);
                        break;
                    case DecoderSpec::Kind::chase:
                        out = chase_decode(word, soft, decoders[d].eta, preset.rs);
                        break;
                    case DecoderSpec::Kind::gmd:
                        out = gmd_decode(word, ReliabilityOrder::from_soft(soft, preset.rs),
                                         preset.rs);
                        break;
                }
                ok[d] = out.ok && out.message == message;
                if (!ok[d]) ++c.failures[d];
            }
            if (idx_hard >= 0 && idx_erasure >= 0 && ok[idx_hard] && !ok[idx_erasure])
                ++c.hard_ok_erasure_fail;
            if (idx_hard >= 0 && idx_gmd >= 0 && ok[idx_hard] && !ok[idx_gmd])
                ++c.hard_ok_gmd_fail;
            if (idx_erasure >= 0 && idx_gmd >= 0 && ok[idx_erasure] && !ok[idx_gmd])
                ++c.erasure_ok_gmd_fail;
        }
        partial[s] = std::move(c);
    });

    DfrReport report;
    std::vector<long> failures(nd, 0);
    for (const auto& c : partial) {
        for (size_t d = 0; d < nd; ++d) failures[d] += c.failures[d];
        report.hard_ok_erasure_fail += c.hard_ok_erasure_fail;
        report.hard_ok_gmd_fail += c.hard_ok_gmd_fail;
        report.erasure_ok_gmd_fail += c.erasure_ok_gmd_fail;
    }
    for (size_t d = 0; d < nd; ++d) {
        DfrRow row;
        row.decoder = decoders[d].describe();
        row.failures = failures[d];
        row.trials = trials;
        row.dfr = static_cast<double>(failures[d]) / trials;
        wilson_ci(failures[d], trials, &row.ci_low, &row.ci_high);
        report.rows.push_back(std::move(row));
    }
    return report;
}

double empirical_trial_failure(const ChannelModel& channel, const RmCode& rm,
                               const RsCode& code, int trial, int theta, long samples,
                               std::uint64_t seed, int workers) {
    if (samples <= 0) throw std::invalid_argument("harness: samples must be positive");
    if (trial < 0 || trial > code.t) throw std::invalid_argument("harness: trial out of range");
    constexpr long kShardSize = 2048;
    const long shards = (samples + kShardSize - 1) / kShardSize;
    std::vector<long> partial(shards, 0);

    run_sharded(shards, workers, [&](long s) {
        std::mt19937_64 rng(shard_seed(seed, static_cast<std::uint64_t>(s)));
        const long count = std::min(kShardSize, samples - s * kShardSize);
        std::vector<std::uint8_t> bits(static_cast<size_t>(128) * rm.copies);
        long fails = 0;
        for (long it = 0; it < count; ++it) {
            int wrong_survivors = 0;
            for (int pos = 0; pos < code.n; ++pos) {
                std::uint8_t symbol = static_cast<std::uint8_t>(rng() & 0xFF);
                rm_encode(symbol, rm, bits.data());
                apply_channel(bits, channel, rng);
                SoftSymbol soft = rm_decode(bits, rm);
                if (soft.max1 > theta && soft.best != symbol) ++wrong_survivors;
            }
            if (wrong_survivors > code.t - trial) ++fails;
        }
        partial[s] = fails;
    });

    long fails = 0;
    for (long f : partial) fails += f;
    return static_cast<double>(fails) / samples;
}

}  // namespace hqc
