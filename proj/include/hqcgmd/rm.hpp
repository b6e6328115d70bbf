#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hqc {

// First-order Reed-Muller (128, 8) with m-fold repetition. Codeword bit j is
// u_0 XOR <u_1..u_7, bits of j>; u_0 is the most significant bit of the
// symbol and doubles as the sign bit on the decoder side.
struct RmCode {
    int n_rm = 128;
    int k_rm = 8;
    int copies = 3;
};

struct SoftSymbol {
    std::uint8_t best = 0;
    std::uint8_t second = 0;
    int max1 = 0;  // |peak| of the Hadamard spectrum
    int max2 = 0;  // second largest magnitude, at a different index
};

// One 128-bit codeword repeated `copies` times; out must hold 128*copies
// entries of 0/1.
void rm_encode(std::uint8_t symbol, const RmCode& code, std::uint8_t* out);

// Component-wise sum of the +-1 maps of the m copies.
std::array<int, 128> rm_aggregate(std::span<const std::uint8_t> bits, const RmCode& code);

// In-place Walsh-Hadamard transform, 7 butterfly stages, exact integers.
void fht128(std::array<int, 128>& v);

SoftSymbol rm_decode_soft(const std::array<int, 128>& aggregated);

SoftSymbol rm_decode(std::span<const std::uint8_t> bits, const RmCode& code);

}  // namespace hqc
