#include "hqcgmd/rs.hpp"

#include <algorithm>

namespace hqc {

RsCode RsCode::make(int n, int k, const Field& f) {
    if (k < 0 || n <= k || (n - k) % 2 != 0)
        throw std::invalid_argument("rs: need 0 <= k < n with n - k even");
    if (n > static_cast<int>(f.order()))
        throw std::invalid_argument("rs: n exceeds field order");
    RsCode code;
    code.n = n;
    code.k = k;
    code.t = (n - k) / 2;
    code.field = &f;
    code.gen = {1};
    for (int j = 1; j <= 2 * code.t; ++j) {
        Poly factor = {f.pow_alpha(j), 1};  // (X + alpha^j)
        code.gen = poly_mul(f, code.gen, factor);
    }
    return code;
}

std::vector<Elem> rs_encode(std::span<const Elem> message, const RsCode& code) {
    if (static_cast<int>(message.size()) != code.k)
        throw std::invalid_argument("rs: message length != k");
    const Field& f = *code.field;
    const int two_t = 2 * code.t;
    // remainder of message * X^{2t} modulo g
    std::vector<Elem> work(code.n, 0);
    std::copy(message.begin(), message.end(), work.begin() + two_t);
    for (int i = code.n - 1; i >= two_t; --i) {
        Elem coef = work[i];
        if (!coef) continue;
        for (int j = 0; j <= two_t; ++j)
            work[i - two_t + j] ^= f.mul(coef, code.gen[j]);
    }
    std::vector<Elem> cw(code.n);
    std::copy(work.begin(), work.begin() + two_t, cw.begin());  // parity
    std::copy(message.begin(), message.end(), cw.begin() + two_t);
    return cw;
}

std::vector<Elem> rs_syndromes(std::span<const Elem> word, const RsCode& code) {
    if (static_cast<int>(word.size()) != code.n)
        throw std::invalid_argument("rs: word length != n");
    const Field& f = *code.field;
    std::vector<Elem> s(2 * code.t);
    for (int j = 1; j <= 2 * code.t; ++j)
        s[j - 1] = f.poly_eval(word, f.pow_alpha(j));
    return s;
}

namespace {

// Shared inversionless BM iterations; lambda/b/gamma/kk are updated in place.
// Iterations run for r = start .. 2t-1 over syndromes synd.
void ibm_iterate(const Field& f, std::span<const Elem> synd, int start, int two_t,
                 Poly& lambda, Poly& b, Elem& gamma, int& l_lambda) {
    int kk = 0;
    const int len = static_cast<int>(lambda.size());
    Poly next(len);
    for (int r = start; r < two_t; ++r) {
        Elem delta = 0;
        for (int i = 0; i <= r && i < len; ++i)
            if (lambda[i]) delta ^= f.mul(lambda[i], synd[r - i]);
        for (int i = 0; i < len; ++i) {
            Elem v = f.mul(gamma, lambda[i]);
            if (i >= 1 && delta) v ^= f.mul(delta, b[i - 1]);
            next[i] = v;
        }
        if (delta != 0 && kk >= 0) {
            b = lambda;
            gamma = delta;
            l_lambda = r + 1 - l_lambda + start;  // erasures count as consumed length
            kk = -kk - 1;
        } else {
            b.insert(b.begin(), 0);
            b.pop_back();
            ++kk;
        }
        lambda.swap(next);
    }
}

}  // namespace

KesOutput rs_kes(std::span<const Elem> synd, const RsCode& code) {
    if (static_cast<int>(synd.size()) != 2 * code.t)
        throw std::invalid_argument("rs: syndrome length != 2t");
    const Field& f = *code.field;
    const int two_t = 2 * code.t;
    KesOutput out;
    out.lambda.assign(two_t + 1, 0);
    out.b.assign(two_t + 1, 0);
    out.lambda[0] = 1;
    out.b[0] = 1;
    out.gamma = 1;
    out.l_lambda = 0;
    ibm_iterate(f, synd, 0, two_t, out.lambda, out.b, out.gamma, out.l_lambda);
    return out;
}

ChienResult chien_search(std::span<const Elem> p, const RsCode& code) {
    const Field& f = *code.field;
    ChienResult res;
    res.evals.resize(code.n);
    for (int l = 0; l < code.n; ++l) {
        Elem v = f.poly_eval(p, f.pow_alpha(-l));
        res.evals[l] = v;
        if (v == 0) res.roots.push_back(l);
    }
    return res;
}

Elem poly_odd_eval(const Field& f, std::span<const Elem> p, Elem x) {
    Elem x2 = f.mul(x, x);
    Elem acc = 0;
    // Horner over odd coefficients, then one multiply by x
    for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) {
        if (i % 2 == 0) continue;
        acc = Field::add(f.mul(acc, x2), p[i]);
    }
    return f.mul(acc, x);
}

std::optional<ErrataList> magnitudes_hk(const KesOutput& kes, std::span<const int> roots,
                                        const RsCode& code, Elem scale_fix) {
    const Field& f = *code.field;
    const int two_t = 2 * code.t;
    Elem num_base = f.mul(scale_fix, f.mul(kes.gamma, kes.lambda.empty() ? Elem{0} : kes.lambda[0]));
    if (num_base == 0) return std::nullopt;
    ErrataList out;
    out.reserve(roots.size());
    for (int l : roots) {
        Elem ail = f.pow_alpha(-l);
        Elem den = f.mul(f.poly_eval(kes.b, ail), poly_odd_eval(f, kes.lambda, ail));
        if (den == 0) return std::nullopt;
        Elem num = f.mul(num_base, f.pow_alpha(-static_cast<long>(l) * two_t));
        out.push_back({l, f.div(num, den)});
    }
    return out;
}

std::optional<ErrataList> magnitudes_forney(std::span<const Elem> lambda,
                                            std::span<const Elem> synd,
                                            std::span<const int> roots, const RsCode& code) {
    const Field& f = *code.field;
    const int two_t = 2 * code.t;
    // Omega = S(X) Lambda(X) mod X^{2t+1}, S(X) = sum_j S_j X^j
    Poly omega(two_t + 1, 0);
    for (int j = 1; j <= two_t; ++j) {
        if (!synd[j - 1]) continue;
        for (size_t i = 0; i < lambda.size() && j + i <= static_cast<size_t>(two_t); ++i)
            omega[j + i] ^= f.mul(synd[j - 1], lambda[i]);
    }
    ErrataList out;
    out.reserve(roots.size());
    for (int l : roots) {
        Elem ail = f.pow_alpha(-l);
        Elem den = poly_odd_eval(f, lambda, ail);
        if (den == 0) return std::nullopt;
        out.push_back({l, f.div(f.poly_eval(omega, ail), den)});
    }
    return out;
}

RsDecodeResult decode_errors_erasures(std::span<const Elem> word,
                                      std::span<const int> erasures, const RsCode& code) {
    const Field& f = *code.field;
    const int two_t = 2 * code.t;
    const int n_eras = static_cast<int>(erasures.size());
    if (n_eras > two_t) throw std::invalid_argument("rs: more than 2t erasures");
    std::vector<char> erased(code.n, 0);
    for (int p : erasures) {
        if (p < 0 || p >= code.n || erased[p])
            throw std::invalid_argument("rs: erasure positions must be distinct and in range");
        erased[p] = 1;
    }

    // fill erased positions with 0, decode the filled word
    std::vector<Elem> filled(word.begin(), word.end());
    for (int p : erasures) filled[p] = 0;
    std::vector<Elem> synd = rs_syndromes(filled, code);

    RsDecodeResult res;
    bool clean = std::all_of(synd.begin(), synd.end(), [](Elem v) { return v == 0; });
    Poly lambda(two_t + 2, 0), b(two_t + 2, 0);
    if (!clean) {
        // erasure locator E(X) = prod (1 + alpha^p X), then BM over the rest
        Poly eloc = {1};
        for (int p : erasures) {
            Poly factor = {1, f.pow_alpha(p)};
            eloc = poly_mul(f, eloc, factor);
        }
        std::copy(eloc.begin(), eloc.end(), lambda.begin());
        b = lambda;
        Elem gamma = 1;
        int l_lambda = n_eras;
        ibm_iterate(f, synd, n_eras, two_t, lambda, b, gamma, l_lambda);

        int deg = poly_deg(lambda);
        if (deg < 0 || deg > two_t) return res;
        ChienResult ch = chien_search(lambda, code);
        if (static_cast<int>(ch.roots.size()) != deg) return res;
        auto mags = magnitudes_forney(lambda, synd, ch.roots, code);
        if (!mags) return res;
        for (const Erratum& e : *mags) filled[e.pos] ^= e.mag;
        std::vector<Elem> check = rs_syndromes(filled, code);
        if (!std::all_of(check.begin(), check.end(), [](Elem v) { return v == 0; }))
            return res;
    }
    res.ok = true;
    res.codeword = std::move(filled);
    res.message.assign(res.codeword.begin() + two_t, res.codeword.end());
    for (int i = 0; i < code.n; ++i)
        if (res.codeword[i] != word[i]) ++res.corrections;
    return res;
}

}  // namespace hqc
