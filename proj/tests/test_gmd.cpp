#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "hqcgmd/gmd.hpp"

using namespace hqc;

namespace {

std::vector<Elem> random_codeword(const RsCode& code, std::mt19937_64& rng,
                                  std::vector<Elem>* msg_out = nullptr) {
    std::vector<Elem> msg(code.k);
    for (auto& v : msg) v = rng() & 0xFF;
    if (msg_out) *msg_out = msg;
    return rs_encode(msg, code);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(idx[i], idx[rng() % (i + 1)]);
    return idx;
}

void inject_at(std::vector<Elem>& word, const std::vector<int>& pos, std::mt19937_64& rng) {
    for (int p : pos) word[p] ^= static_cast<Elem>(1 + rng() % 255);
}

}  // namespace

TEST_CASE("reliability order sorts by max1 with position tie-break") {
    RsCode code = RsCode::make(36, 16);
    std::vector<SoftSymbol> soft(code.n);
    for (int i = 0; i < code.n; ++i) soft[i].max1 = 100;
    soft[7].max1 = 3;
    soft[30].max1 = 3;
    soft[12].max1 = 1;
    ReliabilityOrder ord = ReliabilityOrder::from_soft(soft, code);
    REQUIRE(static_cast<int>(ord.positions.size()) == 2 * code.t);
    CHECK(ord.positions[0] == 12);
    CHECK(ord.positions[1] == 7);
    CHECK(ord.positions[2] == 30);
    CHECK(ord.positions[3] == 0);  // ties at 100 resolve by ascending position

    CHECK_THROWS_AS(ReliabilityOrder::from_soft(std::vector<SoftSymbol>(10), code),
                    std::invalid_argument);
    CHECK_THROWS_AS(ReliabilityOrder::from_positions({1, 2, 3}, code),
                    std::invalid_argument);
    std::vector<int> dup(2 * code.t, 5);
    CHECK_THROWS_AS(ReliabilityOrder::from_positions(dup, code), std::invalid_argument);
}

TEST_CASE("one erasure step forces the requested root into both polynomials") {
    RsCode code = RsCode::make(36, 16);
    const Field& f = *code.field;
    std::vector<Elem> synd(2 * code.t, 0);
    KesOutput kes = rs_kes(synd, code);  // lambda = 1, no errors
    std::mt19937_64 rng(0x40);
    for (int it = 0; it < 100; ++it) {
        ErasureAdditionState st = erasure_add_init(kes, code);
        const int base = st.l_lambda + st.l_b;
        int l = rng() % code.n;
        erasure_add_step(st, f.pow_alpha(-l), ErasureVariant::literal, f);
        REQUIRE(f.poly_eval(st.lambda, f.pow_alpha(-l)) == 0);
        REQUIRE(st.l_lambda + st.l_b == base + 1);
    }
}

TEST_CASE("length bookkeeping advances by exactly one per iteration") {
    RsCode code = RsCode::make(36, 16);
    const Field& f = *code.field;
    std::mt19937_64 rng(0x41);
    for (int it = 0; it < 200; ++it) {
        std::vector<Elem> word = random_codeword(code, rng);
        std::vector<int> perm = random_permutation(code.n, rng);
        std::vector<int> errs(perm.begin(), perm.begin() + 1 + rng() % (2 * code.t));
        inject_at(word, errs, rng);

        KesOutput kes = rs_kes(rs_syndromes(word, code), code);
        ErasureAdditionState st = erasure_add_init(kes, code);
        int base = st.l_lambda + st.l_b;
        std::vector<int> order = random_permutation(code.n, rng);
        for (int i = 0; i < 2 * code.t; ++i) {
            erasure_add_step(st, f.pow_alpha(-order[i]), ErasureVariant::literal, f);
            REQUIRE(st.l_lambda + st.l_b == base + i + 1);
            REQUIRE(poly_deg(st.lambda) <= 2 * code.t + 1);
            REQUIRE(poly_deg(st.b) <= 2 * code.t + 1);
        }
    }
}

TEST_CASE("erasure addition reproduces the errata locator root set") {
    // Within trial capability the errata locator is unique: its roots are the
    // erased positions plus the actual error positions.
    RsCode code = RsCode::make(36, 16);
    const Field& f = *code.field;
    std::mt19937_64 rng(0x42);
    int checked_prefixes = 0;
    for (int it = 0; it < 1000; ++it) {
        std::vector<Elem> word = random_codeword(code, rng);
        std::vector<int> perm = random_permutation(code.n, rng);
        int n_err = 1 + rng() % (code.t + 2);  // occasionally beyond t
        std::vector<int> errs(perm.begin(), perm.begin() + n_err);
        inject_at(word, errs, rng);
        std::vector<int> order = random_permutation(code.n, rng);
        order.resize(2 * code.t);

        KesOutput kes = rs_kes(rs_syndromes(word, code), code);
        ErasureAdditionState st = erasure_add_init(kes, code);
        for (int i = 0; i <= code.t; ++i) {
            if (i > 0) {
                erasure_add_step(st, f.pow_alpha(-order[2 * i - 2]),
                                 ErasureVariant::literal, f);
                erasure_add_step(st, f.pow_alpha(-order[2 * i - 1]),
                                 ErasureVariant::literal, f);
            }
            std::set<int> erased(order.begin(), order.begin() + 2 * i);
            int outside = 0;
            for (int e : errs)
                if (!erased.count(e)) ++outside;
            if (outside > code.t - i) continue;  // beyond this trial's capability

            std::set<int> expect = erased;
            expect.insert(errs.begin(), errs.end());
            ChienResult ch = chien_search(st.lambda, code);
            REQUIRE(poly_deg(st.lambda) == static_cast<int>(expect.size()));
            REQUIRE(std::set<int>(ch.roots.begin(), ch.roots.end()) == expect);
            ++checked_prefixes;
        }
    }
    CHECK(checked_prefixes > 1000);
}

TEST_CASE("gmd corrects whenever some trial has enough erasure coverage") {
    RsCode code = RsCode::make(36, 16);
    std::mt19937_64 rng(0x43);
    for (int it = 0; it < 2000; ++it) {
        std::vector<Elem> msg;
        std::vector<Elem> word = random_codeword(code, rng, &msg);
        std::vector<int> order = random_permutation(code.n, rng);
        order.resize(2 * code.t);

        int i = static_cast<int>(rng() % (code.t + 1));
        int inside = static_cast<int>(rng() % (2 * i + 1));
        int outside = static_cast<int>(rng() % (code.t - i + 1));
        std::vector<int> errs(order.begin(), order.begin() + inside);
        std::vector<int> rest;
        for (int p = 0; p < code.n; ++p)
            if (std::find(order.begin(), order.begin() + 2 * i, p) == order.begin() + 2 * i)
                rest.push_back(p);
        for (int j = 0; j < outside; ++j) {
            std::swap(rest[j], rest[j + rng() % (rest.size() - j)]);
            errs.push_back(rest[j]);
        }
        inject_at(word, errs, rng);

        DecodeOutcome res =
            gmd_decode(word, ReliabilityOrder::from_positions(order, code), code);
        REQUIRE(res.ok);
        REQUIRE(res.message == msg);
        REQUIRE(res.trial_used <= i);
    }
}

TEST_CASE("overloaded patterns are absorbed by the final interpolation trial") {
    // With 2t erasures the survivors number exactly k, so the last trial
    // always interpolates them into a valid codeword. Errors placed entirely
    // outside the reliability list therefore produce a verified but wrong
    // codeword: the decoder cannot flag this case.
    RsCode code = RsCode::make(36, 16);
    std::mt19937_64 rng(0x44);
    for (int it = 0; it < 1000; ++it) {
        std::vector<Elem> msg;
        std::vector<Elem> word = random_codeword(code, rng, &msg);
        std::vector<int> order = random_permutation(code.n, rng);
        order.resize(2 * code.t);
        // t+1 errors placed entirely outside the reliability list: every
        // trial i sees t+1 > t-i errors beyond its erasures
        std::vector<int> rest;
        for (int p = 0; p < code.n; ++p)
            if (std::find(order.begin(), order.end(), p) == order.end()) rest.push_back(p);
        std::vector<int> errs(rest.begin(), rest.begin() + code.t + 1);
        inject_at(word, errs, rng);

        DecodeOutcome res =
            gmd_decode(word, ReliabilityOrder::from_positions(order, code), code);
        REQUIRE(res.ok);
        REQUIRE(rs_encode(res.message, code) == res.codeword);  // verified codeword
        REQUIRE(res.message != msg);  // ... but never the transmitted one
    }
}

TEST_CASE("literal and scaled erasure variants produce identical outcomes") {
    RsCode code = RsCode::make(36, 16);
    std::mt19937_64 rng(0x45);
    for (int it = 0; it < 1000; ++it) {
        std::vector<Elem> word = random_codeword(code, rng);
        std::vector<int> perm = random_permutation(code.n, rng);
        std::vector<int> errs(perm.begin(), perm.begin() + rng() % (2 * code.t + 2));
        inject_at(word, errs, rng);
        std::vector<int> order = random_permutation(code.n, rng);
        order.resize(2 * code.t);
        ReliabilityOrder reliab = ReliabilityOrder::from_positions(order, code);

        DecodeOutcome lit = gmd_decode(word, reliab, code, ErasureVariant::literal);
        DecodeOutcome sca = gmd_decode(word, reliab, code, ErasureVariant::scaled);
        REQUIRE(lit.ok == sca.ok);
        REQUIRE(lit.codeword == sca.codeword);
        REQUIRE(lit.message == sca.message);
        REQUIRE(lit.trial_used == sca.trial_used);
        REQUIRE(lit.corrections == sca.corrections);
    }
}

TEST_CASE("the last gmd trial coincides with erasure-only decoding") {
    RsCode code = RsCode::make(36, 16);
    std::mt19937_64 rng(0x46);
    int final_trial = 0;
    for (int it = 0; it < 500; ++it) {
        std::vector<Elem> msg;
        std::vector<Elem> word = random_codeword(code, rng, &msg);
        std::vector<int> order = random_permutation(code.n, rng);
        order.resize(2 * code.t);
        // 2t errors exactly on the erasure list: trials 0..t-1 all see
        // 2t-2i > t-i leftovers, so only the final trial can succeed
        inject_at(word, order, rng);
        ReliabilityOrder reliab = ReliabilityOrder::from_positions(order, code);

        DecodeOutcome g = gmd_decode(word, reliab, code);
        DecodeOutcome e = erasure_only_decode(word, reliab, code);
        REQUIRE(e.ok);
        REQUIRE(e.trial_used == code.t);
        REQUIRE(e.message == msg);
        REQUIRE(g.ok);
        if (g.trial_used == code.t) {
            ++final_trial;
            REQUIRE(g.codeword == e.codeword);
            REQUIRE(g.message == msg);
        } else {
            // an earlier trial occasionally miscorrects to another verified
            // codeword (roughly 2t/255 of the time via trial t-1)
            REQUIRE(rs_encode(g.message, code) == g.codeword);
        }
    }
    CHECK(final_trial > 400);
}

TEST_CASE("erasure-only decoding succeeds iff the erasures cover the errors") {
    RsCode code = RsCode::make(36, 16);
    std::mt19937_64 rng(0x47);

    SUBCASE("zero errors decode with zero corrections") {
        std::vector<Elem> msg;
        std::vector<Elem> word = random_codeword(code, rng, &msg);
        std::vector<int> order = random_permutation(code.n, rng);
        order.resize(2 * code.t);
        DecodeOutcome res =
            erasure_only_decode(word, ReliabilityOrder::from_positions(order, code), code);
        REQUIRE(res.ok);
        REQUIRE(res.message == msg);
        REQUIRE(res.corrections == 0);
    }

    SUBCASE("covered errors succeed, one escaped error is caught") {
        for (int it = 0; it < 300; ++it) {
            std::vector<Elem> msg;
            std::vector<Elem> word = random_codeword(code, rng, &msg);
            std::vector<int> order = random_permutation(code.n, rng);
            order.resize(2 * code.t);
            std::vector<int> covered(order.begin(), order.end());
            inject_at(word, covered, rng);
            ReliabilityOrder reliab = ReliabilityOrder::from_positions(order, code);
            DecodeOutcome res = erasure_only_decode(word, reliab, code);
            REQUIRE(res.ok);
            REQUIRE(res.message == msg);

            // now also corrupt one position outside the erasure set
            std::vector<int> rest;
            for (int p = 0; p < code.n; ++p)
                if (std::find(order.begin(), order.end(), p) == order.end())
                    rest.push_back(p);
            inject_at(word, {rest[rng() % rest.size()]}, rng);
            res = erasure_only_decode(word, reliab, code);
            if (res.ok) REQUIRE(rs_encode(res.message, code) == res.codeword);
            CHECK_FALSE(res.message == msg);  // 2t+1 errata cannot be corrected
        }
    }
}

TEST_CASE("chase decoding explores runner-up symbols") {
    RsCode code = RsCode::make(36, 16);
    std::mt19937_64 rng(0x48);

    SUBCASE("eta = 0 degenerates to hard decoding") {
        for (int it = 0; it < 200; ++it) {
            std::vector<Elem> word = random_codeword(code, rng);
            std::vector<int> perm = random_permutation(code.n, rng);
            std::vector<int> errs(perm.begin(), perm.begin() + rng() % (code.t + 3));
            inject_at(word, errs, rng);
            std::vector<SoftSymbol> soft(code.n);
            for (int i = 0; i < code.n; ++i) {
                soft[i].best = static_cast<std::uint8_t>(word[i]);
                soft[i].max1 = static_cast<int>(rng() % 384);
                soft[i].second = static_cast<std::uint8_t>(word[i] ^ 1);
            }
            DecodeOutcome c = chase_decode(word, soft, 0, code);
            DecodeOutcome h = hard_decode(word, code);
            REQUIRE(c.ok == h.ok);
            REQUIRE(c.codeword == h.codeword);
        }
    }

    SUBCASE("t+1 errors recoverable through one correct runner-up") {
        for (int it = 0; it < 300; ++it) {
            std::vector<Elem> msg;
            std::vector<Elem> cw = random_codeword(code, rng, &msg);
            std::vector<Elem> word = cw;
            std::vector<int> perm = random_permutation(code.n, rng);
            std::vector<int> errs(perm.begin(), perm.begin() + code.t + 1);
            inject_at(word, errs, rng);

            std::vector<SoftSymbol> soft(code.n);
            for (int i = 0; i < code.n; ++i) {
                soft[i].best = static_cast<std::uint8_t>(word[i]);
                soft[i].max1 = 300;
                soft[i].second = static_cast<std::uint8_t>(word[i] ^ 0x55);
            }
            // one erroneous position becomes least reliable and its
            // runner-up is the transmitted symbol
            int fix = errs[rng() % errs.size()];
            soft[fix].max1 = 1;
            soft[fix].second = static_cast<std::uint8_t>(cw[fix]);

            DecodeOutcome res = chase_decode(word, soft, 3, code);
            REQUIRE(res.ok);
            REQUIRE(res.message == msg);

            DecodeOutcome hard = hard_decode(word, code);
            CHECK_FALSE(hard.ok);  // t+1 errors exceed hard capability
        }
    }

    SUBCASE("eta bounds are enforced") {
        std::vector<Elem> word(code.n, 0);
        std::vector<SoftSymbol> soft(code.n);
        CHECK_THROWS_AS(chase_decode(word, soft, 9, code), std::invalid_argument);
        CHECK_THROWS_AS(chase_decode(word, soft, -1, code), std::invalid_argument);
    }
}

TEST_CASE("clean words decode to themselves on every path") {
    RsCode code = RsCode::make(36, 16);
    std::mt19937_64 rng(0x49);
    std::vector<Elem> msg;
    std::vector<Elem> word = random_codeword(code, rng, &msg);
    std::vector<int> order = random_permutation(code.n, rng);
    order.resize(2 * code.t);
    ReliabilityOrder reliab = ReliabilityOrder::from_positions(order, code);

    DecodeOutcome g = gmd_decode(word, reliab, code);
    REQUIRE(g.ok);
    CHECK(g.trial_used == 0);
    CHECK(g.corrections == 0);
    CHECK(g.message == msg);
    DecodeOutcome h = hard_decode(word, code);
    REQUIRE(h.ok);
    CHECK(h.message == msg);
}
