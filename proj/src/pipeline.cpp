#include "hqcgmd/pipeline.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "hqcgmd/analysis.hpp"

namespace hqc {

HqcPreset HqcPreset::custom(int n_rs, int k_rs, int m) {
    HqcPreset p;
    p.name = "custom";
    p.rm.copies = m;
    p.rs = RsCode::make(n_rs, k_rs);
    p.n = smallest_prime_above(p.payload_bits());
    return p;
}

HqcPreset HqcPreset::by_name(const std::string& name) {
    HqcPreset p;
    if (name == "hqc-128")
        p = custom(46, 16, 3);
    else if (name == "hqc-192")
        p = custom(56, 24, 5);
    else if (name == "hqc-256")
        p = custom(90, 32, 5);
    else if (name == "gmd-128")
        p = custom(36, 16, 3);
    else
        throw std::invalid_argument("unknown preset: " + name);
    p.name = name;
    return p;
}

ChannelModel ChannelModel::parse(const std::string& spec) {
    ChannelModel m;
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "bernoulli") {
        m.kind = Kind::bernoulli;
        m.p = std::stod(arg);
        if (!(m.p >= 0.0 && m.p <= 1.0))
            throw std::invalid_argument("channel: p must be in [0, 1]");
    } else if (kind == "fixed") {
        m.kind = Kind::fixed_weight;
        m.w = std::stol(arg);
        if (m.w < 0) throw std::invalid_argument("channel: weight must be >= 0");
    } else {
        throw std::invalid_argument("channel: expected bernoulli:<p> or fixed:<w>");
    }
    return m;
}

std::string ChannelModel::describe() const {
    char buf[64];
    if (kind == Kind::bernoulli)
        std::snprintf(buf, sizeof buf, "bernoulli:%.12g", p);
    else
        std::snprintf(buf, sizeof buf, "fixed:%ld", w);
    return buf;
}

DecoderSpec DecoderSpec::parse(const std::string& spec) {
    DecoderSpec d;
    if (spec == "hard") {
        d.kind = Kind::hard;
    } else if (spec == "erasure") {
        d.kind = Kind::erasure;
    } else if (spec == "gmd") {
        d.kind = Kind::gmd;
    } else if (spec.rfind("chase:", 0) == 0) {
        d.kind = Kind::chase;
        d.eta = std::stoi(spec.substr(6));
        if (d.eta < 0 || d.eta > 8) throw std::invalid_argument("decoder: chase eta in [0, 8]");
    } else {
        throw std::invalid_argument("decoder: expected hard|erasure|chase:<eta>|gmd");
    }
    return d;
}

std::string DecoderSpec::describe() const {
    switch (kind) {
        case Kind::hard: return "hard";
        case Kind::erasure: return "erasure";
        case Kind::gmd: return "gmd";
        case Kind::chase: return "chase:" + std::to_string(eta);
    }
    return "?";
}

std::vector<std::uint8_t> concat_encode(std::span<const Elem> message, const HqcPreset& preset) {
    std::vector<Elem> cw = rs_encode(message, preset.rs);
    const int seg = preset.rm.copies * preset.rm.n_rm;
    std::vector<std::uint8_t> bits(static_cast<size_t>(seg) * preset.rs.n);
    for (int i = 0; i < preset.rs.n; ++i)
        rm_encode(static_cast<std::uint8_t>(cw[i]), preset.rm, bits.data() + static_cast<size_t>(i) * seg);
    return bits;
}

void apply_channel(std::vector<std::uint8_t>& bits, const ChannelModel& model,
                   std::mt19937_64& rng) {
    const size_t n = bits.size();
    if (model.kind == ChannelModel::Kind::bernoulli) {
        if (model.p <= 0.0) return;
        if (model.p >= 1.0) {
            for (auto& b : bits) b ^= 1;
            return;
        }
        // geometric gap sampling: visit only the flipped positions
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        const double denom = std::log1p(-model.p);
        double pos = -1.0;
        for (;;) {
            double u = uni(rng);
            if (u <= 0.0) u = std::numeric_limits<double>::min();
            pos += 1.0 + std::floor(std::log(u) / denom);
            if (pos >= static_cast<double>(n)) break;
            bits[static_cast<size_t>(pos)] ^= 1;
        }
    } else {
        if (model.w > static_cast<long>(n))
            throw std::invalid_argument("channel: weight exceeds payload length");
        std::unordered_set<size_t> chosen;
        chosen.reserve(static_cast<size_t>(model.w) * 2);
        // Floyd's sampling of a w-subset
        for (size_t j = n - model.w; j < n; ++j) {
            std::uniform_int_distribution<size_t> uni(0, j);
            size_t r = uni(rng);
            if (!chosen.insert(r).second) chosen.insert(j);
        }
        for (size_t pos : chosen) bits[pos] ^= 1;
    }
}

std::vector<SoftSymbol> concat_soft_decode(std::span<const std::uint8_t> bits,
                                           const HqcPreset& preset) {
    const int seg = preset.rm.copies * preset.rm.n_rm;
    if (bits.size() != static_cast<size_t>(seg) * preset.rs.n)
        throw std::invalid_argument("pipeline: payload length != m*128*n_rs");
    std::vector<SoftSymbol> soft(preset.rs.n);
    for (int i = 0; i < preset.rs.n; ++i)
        soft[i] = rm_decode(bits.subspan(static_cast<size_t>(i) * seg, seg), preset.rm);
    return soft;
}

DecodeOutcome concat_decode(std::span<const std::uint8_t> bits, const HqcPreset& preset,
                            const DecoderSpec& decoder) {
    std::vector<SoftSymbol> soft = concat_soft_decode(bits, preset);
    std::vector<Elem> word(preset.rs.n);
    for (int i = 0; i < preset.rs.n; ++i) word[i] = soft[i].best;
    switch (decoder.kind) {
        case DecoderSpec::Kind::hard:
            return hard_decode(word, preset.rs);
        case DecoderSpec::Kind::erasure:
            return erasure_only_decode(word, ReliabilityOrder::from_soft(soft, preset.rs),
                                       preset.rs);
        case DecoderSpec::Kind::chase:
            return chase_decode(word, soft, decoder.eta, preset.rs);
        case DecoderSpec::Kind::gmd:
            return gmd_decode(word, ReliabilityOrder::from_soft(soft, preset.rs), preset.rs);
    }
    throw std::logic_error("pipeline: unreachable decoder kind");
}

}  // namespace hqc
