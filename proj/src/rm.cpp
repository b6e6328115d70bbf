#include "hqcgmd/rm.hpp"

#include <bit>

namespace hqc {

void rm_encode(std::uint8_t symbol, const RmCode& code, std::uint8_t* out) {
    const int sign = (symbol >> 7) & 1;
    const unsigned idx = symbol & 0x7Fu;
    std::uint8_t block[128];
    for (unsigned j = 0; j < 128; ++j)
        block[j] = static_cast<std::uint8_t>(sign ^ (std::popcount(idx & j) & 1));
    for (int c = 0; c < code.copies; ++c)
        for (int j = 0; j < 128; ++j) out[c * 128 + j] = block[j];
}

std::array<int, 128> rm_aggregate(std::span<const std::uint8_t> bits, const RmCode& code) {
    if (bits.size() != static_cast<size_t>(128 * code.copies))
        throw std::invalid_argument("rm: expected 128*copies bits");
    std::array<int, 128> v{};
    for (int c = 0; c < code.copies; ++c)
        for (int j = 0; j < 128; ++j) v[j] += bits[c * 128 + j] ? 1 : -1;
    return v;
}

void fht128(std::array<int, 128>& v) {
    for (int h = 1; h < 128; h <<= 1) {
        for (int base = 0; base < 128; base += h << 1) {
            for (int j = base; j < base + h; ++j) {
                int a = v[j];
                int b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

namespace {

// Peak sign convention: H[w] > 0 means the complemented codeword (u_0 = 1)
// correlates best; ties prefer the positive sign.
std::uint8_t pack_symbol(int value, int index) {
    int sign = value >= 0 ? 1 : 0;
    return static_cast<std::uint8_t>((sign << 7) | index);
}

}  // namespace

SoftSymbol rm_decode_soft(const std::array<int, 128>& aggregated) {
    std::array<int, 128> h = aggregated;
    fht128(h);
    int peak = 0;
    int peak_mag = -1;
    for (int w = 0; w < 128; ++w) {
        int mag = h[w] < 0 ? -h[w] : h[w];
        if (mag > peak_mag) {
            peak_mag = mag;
            peak = w;
        }
    }
    int second = -1;
    int second_mag = -1;
    for (int w = 0; w < 128; ++w) {
        if (w == peak) continue;
        int mag = h[w] < 0 ? -h[w] : h[w];
        if (mag > second_mag) {
            second_mag = mag;
            second = w;
        }
    }
    SoftSymbol s;
    s.best = pack_symbol(h[peak], peak);
    s.max1 = peak_mag;
    s.second = pack_symbol(h[second], second);
    s.max2 = second_mag;
    return s;
}

SoftSymbol rm_decode(std::span<const std::uint8_t> bits, const RmCode& code) {
    return rm_decode_soft(rm_aggregate(bits, code));
}

}  // namespace hqc
