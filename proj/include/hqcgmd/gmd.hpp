#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hqcgmd/rm.hpp"
#include "hqcgmd/rs.hpp"

namespace hqc {

// The 2t least reliable positions, least reliable first; ties broken by
// ascending position.
struct ReliabilityOrder {
    std::vector<int> positions;

    static ReliabilityOrder from_soft(std::span<const SoftSymbol> soft, const RsCode& code);
    static ReliabilityOrder from_positions(std::vector<int> positions, const RsCode& code);
};

enum class ErasureVariant {
    literal,  // Algorithm lines verbatim
    scaled,   // line 13 scaled by alpha_i; transparent after compensation
};

// State of the one-pass erasure addition: Lambda^(i), script-B^(i), their
// length bookkeeping, and the accumulated scalar of the Bezout invariant
// (gamma * Lambda_0 * sigma * X^{2t+1} * E(X)) used by the magnitude formula.
struct ErasureAdditionState {
    Poly lambda;
    Poly b;
    int l_lambda = 0;
    int l_b = 0;
    Elem sigma = 1;
    bool degenerate = false;  // both evaluations vanished; trials can no longer pass
};

ErasureAdditionState erasure_add_init(const KesOutput& kes, const RsCode& code);

void erasure_add_step(ErasureAdditionState& state, Elem erasure_locator_inv,
                      ErasureVariant variant, const Field& f);

struct DecodeOutcome {
    bool ok = false;
    std::vector<Elem> codeword;
    std::vector<Elem> message;
    int trial_used = -1;   // GMD trial index, -1 when not applicable
    int corrections = 0;
};

DecodeOutcome hard_decode(std::span<const Elem> word, const RsCode& code);

// t+1 trials of error-and-erasure decoding, erasures added two at a time in
// reliability order via the one-pass state; the first passing trial wins.
DecodeOutcome gmd_decode(std::span<const Elem> word, const ReliabilityOrder& reliab,
                         const RsCode& code, ErasureVariant variant = ErasureVariant::literal);

// Trial i = t alone: all 2t least reliable symbols erased.
DecodeOutcome erasure_only_decode(std::span<const Elem> word, const ReliabilityOrder& reliab,
                                  const RsCode& code);

// 2^eta test patterns toggling the eta least reliable symbols to their
// runner-up values; successful candidates compete on symbol Hamming
// distance to the received word.
DecodeOutcome chase_decode(std::span<const Elem> word, std::span<const SoftSymbol> soft,
                           int eta, const RsCode& code);

}  // namespace hqc
