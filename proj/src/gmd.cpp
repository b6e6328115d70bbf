#include "hqcgmd/gmd.hpp"

#include <algorithm>
#include <numeric>

namespace hqc {

ReliabilityOrder ReliabilityOrder::from_soft(std::span<const SoftSymbol> soft,
                                             const RsCode& code) {
    if (static_cast<int>(soft.size()) != code.n)
        throw std::invalid_argument("gmd: soft metrics length != n");
    std::vector<int> idx(code.n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (soft[a].max1 != soft[b].max1) return soft[a].max1 < soft[b].max1;
        return a < b;
    });
    ReliabilityOrder ord;
    ord.positions.assign(idx.begin(), idx.begin() + 2 * code.t);
    return ord;
}

ReliabilityOrder ReliabilityOrder::from_positions(std::vector<int> positions,
                                                  const RsCode& code) {
    if (static_cast<int>(positions.size()) != 2 * code.t)
        throw std::invalid_argument("gmd: need exactly 2t positions");
    std::vector<char> seen(code.n, 0);
    for (int p : positions) {
        if (p < 0 || p >= code.n || seen[p])
            throw std::invalid_argument("gmd: positions must be distinct and in range");
        seen[p] = 1;
    }
    return ReliabilityOrder{std::move(positions)};
}

ErasureAdditionState erasure_add_init(const KesOutput& kes, const RsCode& code) {
    const int len = 2 * code.t + 2;
    ErasureAdditionState st;
    st.lambda.assign(len, 0);
    std::copy(kes.lambda.begin(), kes.lambda.end(), st.lambda.begin());
    st.b.assign(len, 0);  // script-B starts as X * B
    std::copy(kes.b.begin(), kes.b.begin() + std::min<size_t>(kes.b.size(), len - 1),
              st.b.begin() + 1);
    // Lengths follow the key equation solver's LFSR bookkeeping, with the
    // invariant l_lambda + l_b = 2t + 1 before the first erasure. Using
    // polynomial degrees here instead would flip the update branch one step
    // early at the exact capability boundary and lose error roots.
    st.l_lambda = kes.l_lambda;
    st.l_b = 2 * code.t + 1 - kes.l_lambda;
    st.sigma = 1;
    return st;
}

void erasure_add_step(ErasureAdditionState& state, Elem erasure_locator_inv,
                      ErasureVariant variant, const Field& f) {
    const Elem a = erasure_locator_inv;  // root the erasure must contribute
    const Elem li = f.poly_eval(state.lambda, a);
    const Elem bi = f.poly_eval(state.b, a);
    const size_t len = state.lambda.size();
    Poly nl(len), nb(len);
    if (li == 0 || (bi != 0 && state.l_lambda >= state.l_b)) {
        // lambda' = B_i lambda - lambda_i B; B' = (X - a) B
        for (size_t j = 0; j < len; ++j) {
            nl[j] = Field::add(f.mul(bi, state.lambda[j]), f.mul(li, state.b[j]));
            nb[j] = f.mul(a, state.b[j]);
            if (j >= 1) nb[j] ^= state.b[j - 1];
        }
        state.l_b += 1;
        state.sigma = f.mul(state.sigma, bi);
        if (bi == 0 && li == 0) state.degenerate = true;
    } else {
        // lambda' = (X - a) lambda; B' = B_i X lambda - a lambda_i B,
        // the scaled variant multiplies that line by alpha_i = a^{-1}
        const Elem bscale = variant == ErasureVariant::scaled ? f.div(bi, a) : bi;
        const Elem lscale = variant == ErasureVariant::scaled ? li : f.mul(a, li);
        for (size_t j = 0; j < len; ++j) {
            nl[j] = f.mul(a, state.lambda[j]);
            if (j >= 1) nl[j] ^= state.lambda[j - 1];
            nb[j] = f.mul(lscale, state.b[j]);
            if (j >= 1) nb[j] ^= f.mul(bscale, state.lambda[j - 1]);
        }
        state.l_lambda += 1;
        state.sigma = f.mul(state.sigma, variant == ErasureVariant::scaled ? li : f.mul(a, li));
    }
    state.lambda.swap(nl);
    state.b.swap(nb);
}

namespace {

// Magnitudes for an errata locator produced by erasure addition. At erased
// positions both lambda and script-B vanish, so those take the evaluator
// route; everywhere else the closed form
//   e_l = c * sigma * a^{2t+1} * E(a) / (B(a) * lambda_odd(a)),  a = alpha^{-l}
// applies, with E the monic erasure locator and c = gamma * lambda_0 from
// the key equation solver.
std::optional<ErrataList> trial_magnitudes(const RsCode& code, const ErasureAdditionState& st,
                                           Elem c, std::span<const Elem> synd,
                                           std::span<const int> roots,
                                           std::span<const int> erased_positions,
                                           std::span<const char> erased) {
    const Field& f = *code.field;
    const int two_t = 2 * code.t;
    Elem num_base = f.mul(c, st.sigma);
    if (num_base == 0) return std::nullopt;

    std::vector<int> erased_roots;
    ErrataList out;
    out.reserve(roots.size());
    for (int l : roots) {
        if (erased[l]) {
            erased_roots.push_back(l);
            continue;
        }
        Elem a = f.pow_alpha(-l);
        Elem den = f.mul(f.poly_eval(st.b, a), poly_odd_eval(f, st.lambda, a));
        if (den == 0) return std::nullopt;
        Elem e_at_a = 1;
        for (int p : erased_positions) e_at_a = f.mul(e_at_a, Field::add(a, f.pow_alpha(-p)));
        Elem num = f.mul(num_base, f.mul(f.pow_alpha(-static_cast<long>(l) * (two_t + 1)), e_at_a));
        out.push_back({l, f.div(num, den)});
    }
    if (!erased_roots.empty()) {
        auto mags = magnitudes_forney(st.lambda, synd, erased_roots, code);
        if (!mags) return std::nullopt;
        out.insert(out.end(), mags->begin(), mags->end());
    }
    return out;
}

bool finish_outcome(DecodeOutcome& res, std::span<const Elem> word, std::vector<Elem> corrected,
                    const RsCode& code, int trial) {
    std::vector<Elem> check = rs_syndromes(corrected, code);
    if (!std::all_of(check.begin(), check.end(), [](Elem v) { return v == 0; })) return false;
    res.ok = true;
    res.codeword = std::move(corrected);
    res.message.assign(res.codeword.begin() + 2 * code.t, res.codeword.end());
    res.trial_used = trial;
    res.corrections = 0;
    for (int i = 0; i < code.n; ++i)
        if (res.codeword[i] != word[i]) ++res.corrections;
    return true;
}

}  // namespace

DecodeOutcome hard_decode(std::span<const Elem> word, const RsCode& code) {
    RsDecodeResult r = decode_errors_erasures(word, {}, code);
    DecodeOutcome out;
    out.ok = r.ok;
    out.codeword = std::move(r.codeword);
    out.message = std::move(r.message);
    out.corrections = r.corrections;
    return out;
}

DecodeOutcome gmd_decode(std::span<const Elem> word, const ReliabilityOrder& reliab,
                         const RsCode& code, ErasureVariant variant) {
    const Field& f = *code.field;
    if (static_cast<int>(reliab.positions.size()) != 2 * code.t)
        throw std::invalid_argument("gmd: need exactly 2t reliability positions");

    DecodeOutcome res;
    std::vector<Elem> synd = rs_syndromes(word, code);
    if (std::all_of(synd.begin(), synd.end(), [](Elem v) { return v == 0; })) {
        finish_outcome(res, word, std::vector<Elem>(word.begin(), word.end()), code, 0);
        return res;
    }

    KesOutput kes = rs_kes(synd, code);
    Elem c = f.mul(kes.gamma, kes.lambda[0]);
    ErasureAdditionState st = erasure_add_init(kes, code);
    std::vector<char> erased(code.n, 0);

    for (int trial = 0; trial <= code.t; ++trial) {
        if (trial > 0) {
            for (int j = 2 * (trial - 1); j < 2 * trial; ++j) {
                int p = reliab.positions[j];
                erasure_add_step(st, f.pow_alpha(-p), variant, f);
                erased[p] = 1;
            }
        }
        if (st.degenerate) continue;
        int deg = poly_deg(st.lambda);
        if (deg < 0 || deg > code.t + trial) continue;
        ChienResult ch = chien_search(st.lambda, code);
        if (static_cast<int>(ch.roots.size()) != deg) continue;
        auto erased_now = std::span<const int>(reliab.positions).first(2 * trial);
        auto mags = trial_magnitudes(code, st, c, synd, ch.roots, erased_now, erased);
        if (!mags) continue;
        std::vector<Elem> corrected(word.begin(), word.end());
        for (const Erratum& e : *mags) corrected[e.pos] ^= e.mag;
        if (finish_outcome(res, word, std::move(corrected), code, trial)) return res;
    }
    return res;
}

DecodeOutcome erasure_only_decode(std::span<const Elem> word, const ReliabilityOrder& reliab,
                                  const RsCode& code) {
    if (static_cast<int>(reliab.positions.size()) != 2 * code.t)
        throw std::invalid_argument("gmd: need exactly 2t reliability positions");
    RsDecodeResult r = decode_errors_erasures(word, reliab.positions, code);
    DecodeOutcome out;
    out.ok = r.ok;
    out.codeword = std::move(r.codeword);
    out.message = std::move(r.message);
    out.corrections = r.corrections;
    out.trial_used = r.ok ? code.t : -1;
    return out;
}

DecodeOutcome chase_decode(std::span<const Elem> word, std::span<const SoftSymbol> soft,
                           int eta, const RsCode& code) {
    if (eta < 0 || eta > 8) throw std::invalid_argument("chase: eta must be in [0, 8]");
    if (static_cast<int>(soft.size()) != code.n)
        throw std::invalid_argument("chase: soft metrics length != n");
    std::vector<int> idx(code.n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (soft[a].max1 != soft[b].max1) return soft[a].max1 < soft[b].max1;
        return a < b;
    });

    DecodeOutcome best;
    int best_dist = code.n + 1;
    for (unsigned pattern = 0; pattern < (1u << eta); ++pattern) {
        std::vector<Elem> cand(word.begin(), word.end());
        for (int b = 0; b < eta; ++b)
            if (pattern & (1u << b)) cand[idx[b]] = soft[idx[b]].second;
        RsDecodeResult r = decode_errors_erasures(cand, {}, code);
        if (!r.ok) continue;
        int dist = 0;
        for (int i = 0; i < code.n; ++i)
            if (r.codeword[i] != word[i]) ++dist;
        if (dist < best_dist) {
            best_dist = dist;
            best.ok = true;
            best.codeword = std::move(r.codeword);
            best.message = std::move(r.message);
            best.corrections = dist;
        }
    }
    return best;
}

}  // namespace hqc
