#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "hqcgmd/gmd.hpp"
#include "hqcgmd/rm.hpp"
#include "hqcgmd/rs.hpp"

namespace hqc {

// Concatenated code instance: inner RM(128,8) repeated m times, outer RS
// over GF(2^8), plus the ambient block length n (smallest prime above the
// payload size for which 2 generates the multiplicative group).
struct HqcPreset {
    std::string name;
    RmCode rm;
    RsCode rs;
    long n = 0;

    long payload_bits() const { return static_cast<long>(rm.copies) * rm.n_rm * rs.n; }

    // Known names: hqc-128, hqc-192, hqc-256, gmd-128.
    static HqcPreset by_name(const std::string& name);
    static HqcPreset custom(int n_rs, int k_rs, int m);
};

struct ChannelModel {
    enum class Kind { bernoulli, fixed_weight };
    Kind kind = Kind::bernoulli;
    double p = 0.0;  // per-bit flip probability
    long w = 0;      // number of flipped bits for fixed_weight

    // "bernoulli:<p>" or "fixed:<w>"
    static ChannelModel parse(const std::string& spec);
    std::string describe() const;
};

struct DecoderSpec {
    enum class Kind { hard, erasure, chase, gmd };
    Kind kind = Kind::hard;
    int eta = 0;  // chase only

    // "hard", "erasure", "chase:<eta>", "gmd"
    static DecoderSpec parse(const std::string& spec);
    std::string describe() const;
};

// RS encode then per-symbol RM encode; RS position 0 occupies the lowest
// bits. Output length = m * 128 * n_rs, entries 0/1.
std::vector<std::uint8_t> concat_encode(std::span<const Elem> message, const HqcPreset& preset);

// In-place corruption, deterministic given the RNG state. Bernoulli flips
// skip ahead geometrically; fixed_weight flips a uniform w-subset.
void apply_channel(std::vector<std::uint8_t>& bits, const ChannelModel& model,
                   std::mt19937_64& rng);

// Per-segment RM soft decoding; element i corresponds to RS position i.
std::vector<SoftSymbol> concat_soft_decode(std::span<const std::uint8_t> bits,
                                           const HqcPreset& preset);

DecodeOutcome concat_decode(std::span<const std::uint8_t> bits, const HqcPreset& preset,
                            const DecoderSpec& decoder);

}  // namespace hqc
