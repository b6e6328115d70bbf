#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hqcgmd/gf.hpp"

namespace hqc {

// Reed-Solomon code over GF(2^m), generator polynomial with roots
// alpha^1 .. alpha^{2t} (narrow sense), systematic encoding with the
// message in the high-order positions 2t .. n-1.
struct RsCode {
    int n = 0;
    int k = 0;
    int t = 0;
    const Field* field = nullptr;
    Poly gen;  // generator polynomial, degree 2t

    static RsCode make(int n, int k, const Field& f = Field::gf256());
};

std::vector<Elem> rs_encode(std::span<const Elem> message, const RsCode& code);

// s[j-1] = r(alpha^j), j = 1 .. 2t.
std::vector<Elem> rs_syndromes(std::span<const Elem> word, const RsCode& code);

// Inversionless Berlekamp-Massey output. lambda and b are defined up to a
// common nonzero scalar; gamma is the discrepancy scalar from the last
// iteration, chosen so the Horiguchi-Koetter magnitude formula holds exactly.
struct KesOutput {
    Poly lambda;
    Poly b;
    Elem gamma = 1;
    int l_lambda = 0;  // LFSR length bookkeeping
};

KesOutput rs_kes(std::span<const Elem> synd, const RsCode& code);

struct ChienResult {
    std::vector<int> roots;       // positions l with p(alpha^{-l}) = 0
    std::vector<Elem> evals;      // p(alpha^{-l}) for every l in [0, n)
};

ChienResult chien_search(std::span<const Elem> p, const RsCode& code);

struct Erratum {
    int pos;
    Elem mag;
    bool operator==(const Erratum&) const = default;
};
using ErrataList = std::vector<Erratum>;

// Odd-part evaluation sum_{i odd} p_i x^i, the Chien-search byproduct the
// magnitude formulas divide by.
Elem poly_odd_eval(const Field& f, std::span<const Elem> p, Elem x);

// e_l = scale_fix * gamma * Lambda_0 * alpha^{-2tl} / (B(alpha^{-l}) Lambda_odd(alpha^{-l})).
// nullopt on a zero denominator.
std::optional<ErrataList> magnitudes_hk(const KesOutput& kes, std::span<const int> roots,
                                        const RsCode& code, Elem scale_fix = 1);

// Forney via the error evaluator Omega = S(X) Lambda(X) mod X^{2t+1} with
// S(X) = sum_j S_j X^j; independent of the KES auxiliary outputs.
std::optional<ErrataList> magnitudes_forney(std::span<const Elem> lambda,
                                            std::span<const Elem> synd,
                                            std::span<const int> roots, const RsCode& code);

struct RsDecodeResult {
    bool ok = false;
    std::vector<Elem> codeword;
    std::vector<Elem> message;
    int corrections = 0;
};

// Classic errors-and-erasures decoding: erasure-locator-initialized KES,
// Chien, Forney, then root-count and re-encoded-syndrome verification.
// Failure is reported in the result, never thrown.
RsDecodeResult decode_errors_erasures(std::span<const Elem> word,
                                      std::span<const int> erasures, const RsCode& code);

}  // namespace hqc
