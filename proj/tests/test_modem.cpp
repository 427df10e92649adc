#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rscod/capacity.hpp"
#include "rscod/modem.hpp"

using namespace rsc;
using namespace rsc::modem;

TEST_CASE("SPC soft decision, worked example") {
    // sent (+5,+5,-5,+5,-5,+5); received (+4,+3,-4,-1,-3,+5)
    Soft r{4, 3, -4, -1, -3, 5};
    Bits dec = spc_soft_decode(r);
    CHECK(dec == Bits{1, 1, 0, 1, 0, 1});  // position four flipped
    // already even parity stays the hard decision
    Soft clean{4, 3, -4, -2, -3, -5};
    CHECK(spc_soft_decode(clean) == hard_decision(clean));
}

TEST_CASE("SPC soft decision equals exhaustive ML for n <= 10") {
    Xoshiro256 rng(21);
    for (unsigned n : {4u, 7u, 10u}) {
        // all even-parity words
        std::vector<Bits> codebook;
        for (unsigned w = 0; w < (1u << n); ++w) {
            int parity = __builtin_popcount(w) & 1;
            if (parity) continue;
            Bits b(n);
            for (unsigned i = 0; i < n; ++i) b[i] = (w >> i) & 1;
            codebook.push_back(b);
        }
        for (int trial = 0; trial < 4000; ++trial) {
            Soft r(n);
            for (auto& v : r) v = 4.0 * rng.uniform() - 2.0;
            Bits dec = spc_soft_decode(r);
            // output is always even parity
            int p = 0;
            for (int b : dec) p ^= b;
            CHECK(p == 0);
            double dec_dist = 0;
            for (unsigned i = 0; i < n; ++i) {
                double s = dec[i] ? 1.0 : -1.0;
                dec_dist += (r[i] - s) * (r[i] - s);
            }
            for (const auto& c : codebook) {
                double d = 0;
                for (unsigned i = 0; i < n; ++i) {
                    double s = c[i] ? 1.0 : -1.0;
                    d += (r[i] - s) * (r[i] - s);
                }
                CHECK(dec_dist <= d + 1e-9);
            }
        }
    }
}

TEST_CASE("AWGN channel crossover") {
    AwgnChannel ch(1.0, 1.0, 5);  // d/2 = 1, sigma^2 = 1
    CHECK(ch.p_bsc() == doctest::Approx(0.15866).epsilon(1e-4));
    // empirical BER within 3 sigma of the formula
    Bits tx(200000);
    Xoshiro256 rng(6);
    for (auto& b : tx) b = (int)rng.below(2);
    Bits rx = hard_decision(ch.transmit(tx));
    std::uint64_t err = 0;
    for (size_t i = 0; i < tx.size(); ++i)
        if (tx[i] != rx[i]) ++err;
    double p = (double)err / tx.size();
    double sd = std::sqrt(0.15866 * (1 - 0.15866) / tx.size());
    CHECK(std::fabs(p - 0.15866) <= 3 * sd + 1e-9);
    // vanishing noise: hard decisions reproduce the word
    AwgnChannel quiet(1.0, 1e-12, 7);
    Bits w{1, 0, 0, 1, 1};
    CHECK(hard_decision(quiet.transmit(w)) == w);
}

TEST_CASE("coding gains") {
    CHECK(coding_gain_db(2, 1, 2) == doctest::Approx(0.0));  // d k/n = 1
    // SPC at large n approaches 3 dB; the exact figure for d_min k/n = 2(n-1)/n
    CHECK(10.0 * std::log10(2.0) == doctest::Approx(3.0103).epsilon(1e-4));
    // the symbol-parity concatenation gain marker at m = 5
    CHECK(10.0 * std::log10(2.0 * 5.0 / 6.0) == doctest::Approx(2.2).epsilon(0.01));
}

TEST_CASE("RS symbols extended with a parity bit") {
    auto f = GaloisField::binary_default(3);
    RsCode code(f, 7, 3);
    RsSpcSymbolCodec codec(code);
    CHECK(codec.rate() == doctest::Approx(3.0 / 7.0 * 3.0 / 4.0));
    Vec info{5, 2, 7};
    Bits tx = codec.encode(info);
    CHECK(tx.size() == 7 * 4);
    // noiseless transmission is the identity
    Soft soft(tx.size());
    for (size_t i = 0; i < tx.size(); ++i) soft[i] = tx[i] ? 1.0 : -1.0;
    auto res = codec.decode(soft);
    CHECK(res.ok);
    CHECK(res.info == info);
    // single worst-bit sign flip per symbol is absorbed by the per-symbol flip
    Soft hit = soft;
    for (unsigned j = 0; j < 7; ++j) {
        size_t base = (size_t)j * 4;
        size_t weakest = base;  // all margins equal; shrink one and flip it
        hit[weakest] = (soft[weakest] > 0 ? -0.1 : 0.1);
    }
    auto res2 = codec.decode(hit);
    CHECK(res2.ok);
    CHECK(res2.info == info);
}

TEST_CASE("block RS-SPC codec") {
    auto f = GaloisField::binary_default(3);
    RsCode code(f, 7, 3);
    BlockRsSpcCodec codec(code, 4);
    Xoshiro256 rng(31);
    std::vector<Vec> info(3, Vec(3));
    for (auto& w : info)
        for (auto& v : w) v = (Label)rng.below(8);
    auto rows = codec.encode(info);
    REQUIRE(rows.size() == 4);
    // parity row is the XOR of the others
    for (size_t b = 0; b < rows[0].size(); ++b)
        CHECK(rows[3][b] == (rows[0][b] ^ rows[1][b] ^ rows[2][b]));

    auto to_soft = [](const Bits& bits) {
        Soft s(bits.size());
        for (size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? 1.0 : -1.0;
        return s;
    };
    SUBCASE("clean block decodes to itself") {
        std::vector<Soft> soft;
        for (const auto& r : rows) soft.push_back(to_soft(r));
        auto res = codec.decode(soft);
        CHECK(res.ok);
        CHECK(res.info == info);
    }
    SUBCASE("a pure-noise row is restored by the column SPC stage") {
        std::vector<Soft> soft;
        for (const auto& r : rows) soft.push_back(to_soft(r));
        Xoshiro256 jam(32);
        for (auto& v : soft[1]) v = 0.3 * (2.0 * jam.uniform() - 1.0);
        auto res = codec.decode(soft);
        CHECK(res.ok);
        CHECK(res.info == info);
    }
    SUBCASE("one flagged row is repaired by the XOR of the others") {
        // an uncorrectable 5-symbol error pattern for the (7,3) column code
        Vec e{7, 7, 7, 7, 3, 0, 0};  // verified uncorrectable 5-symbol pattern
        REQUIRE(!code.decode_syndrome(code.syndrome(e)).ok());
        std::vector<unsigned> broken;
        for (unsigned s = 0; s < 7; ++s)
            if (e[s]) broken.push_back(s);
        // row 1 carries e with confident wrong bits; per corrupted column one
        // designated clean row is the weakest, so the SPC flips land there,
        // confined to at most two symbols per clean row
        std::vector<Soft> soft;
        for (const auto& r : rows) soft.push_back(to_soft(r));
        unsigned clean_rows[3] = {0, 2, 3};
        for (unsigned si = 0; si < broken.size(); ++si) {
            unsigned sym = broken[si];
            unsigned designated = clean_rows[si % 3];
            for (unsigned b = 0; b < 3; ++b) {
                if (!((e[sym] >> b) & 1)) continue;
                size_t col = (size_t)sym * 3 + b;
                soft[1][col] = -soft[1][col] * 1.2;
                soft[designated][col] *= 0.9;
            }
        }
        auto res = codec.decode(soft);
        CHECK(res.ok);
        CHECK(res.info == info);
    }
    SUBCASE("paired corruption beyond capability trips the loop guard") {
        Vec e{7, 7, 7, 7, 3, 0, 0};
        REQUIRE(!code.decode_syndrome(code.syndrome(e)).ok());
        // rows 1 and 3 flip the same bits: every column parity stays even, so
        // the SPC stage is silent and both rows stay uncorrectable
        std::vector<Soft> soft;
        for (const auto& r : rows) soft.push_back(to_soft(r));
        for (unsigned s = 0; s < 7; ++s) {
            for (unsigned b = 0; b < 3; ++b) {
                if (!((e[s] >> b) & 1)) continue;
                soft[1][(size_t)s * 3 + b] = -soft[1][(size_t)s * 3 + b];
                soft[3][(size_t)s * 3 + b] = -soft[3][(size_t)s * 3 + b];
            }
        }
        auto res = codec.decode(soft);
        CHECK(res.stopped);
        CHECK(!res.ok);
    }
    SUBCASE("Monte Carlo at moderate noise: mostly recovered, guard fires sometimes") {
        unsigned ok = 0, match = 0, stopped = 0, blocks = 500;
        for (unsigned t = 0; t < blocks; ++t) {
            Xoshiro256 r2(hash_seed(900, t));
            std::vector<Vec> inf(3, Vec(3));
            for (auto& w : inf)
                for (auto& v : w) v = (Label)r2.below(8);
            auto rws = codec.encode(inf);
            AwgnChannel ch(1.0, 0.55, hash_seed(901, t));
            std::vector<Soft> soft;
            for (const auto& r : rws) soft.push_back(ch.transmit(r));
            auto res = codec.decode(soft);
            ok += res.ok;
            stopped += res.stopped;
            match += (res.info == inf);
        }
        CHECK(match >= blocks * 9 / 10);
        CHECK(stopped > 0);
        CHECK(ok + stopped == blocks);
    }
}

TEST_CASE("likelihood repair selects the miscorrected row") {
    auto f = GaloisField::binary_default(3);
    RsCode code(f, 7, 3);
    BlockRsSpcCodec codec(code, 4);
    // moderate SNR: soft values are the true rows plus noise
    unsigned hits = 0, trials = 10000;
    for (unsigned trial = 0; trial < trials; ++trial) {
        Xoshiro256 rng(hash_seed(77, trial));
        std::vector<Vec> cw(4);
        Vec parity(7, 0);
        for (unsigned i = 0; i < 3; ++i) {
            Vec x(3);
            for (auto& v : x) v = (Label)rng.below(8);
            cw[i] = code.encode_systematic(x);
            for (unsigned j = 0; j < 7; ++j) parity[j] = f.add(parity[j], cw[i][j]);
        }
        cw[3] = parity;
        AwgnChannel ch(1.0, 0.25, hash_seed(78, trial));
        std::vector<Soft> soft;
        for (const auto& c : cw) {
            Bits bits;
            for (Label s : c) {
                auto sb = label_to_bits(s, 3);
                bits.insert(bits.end(), sb.begin(), sb.end());
            }
            soft.push_back(ch.transmit(bits));
        }
        // a silent miscorrection: one decoded row off by a random codeword
        unsigned bad = (unsigned)rng.below(4);
        Vec delta;
        do {
            Vec x(3);
            for (auto& v : x) v = (Label)rng.below(8);
            delta = code.encode_systematic(x);
        } while (std::all_of(delta.begin(), delta.end(), [](Label v) { return v == 0; }));
        std::vector<Vec> decoded = cw;
        for (unsigned j = 0; j < 7; ++j) decoded[bad][j] = f.add(decoded[bad][j], delta[j]);
        if (codec.select_repair_row(soft, decoded, delta) == bad) ++hits;
    }
    CHECK((double)hits / trials >= 0.99);
}

TEST_CASE("MFSK threshold detection and the disturbance patterns") {
    Vec word{0, 1, 2, 3};  // transmit (1,2,3,4) as frequencies f1..f4
    double es = 4.0;
    auto energies = ideal_envelopes(word, 4, es);
    auto clean = mfsk_detect(energies, es);
    // no noise: one 1 per column on the diagonal
    for (unsigned fr = 0; fr < 4; ++fr)
        for (unsigned t = 0; t < 4; ++t) CHECK(clean.cell[fr][t] == (fr == t));

    SUBCASE("narrowband sets a full row") {
        auto m = apply_disturbance(clean, Disturbance::Narrowband, 0);
        for (unsigned t = 0; t < 4; ++t) CHECK(m.cell[0][t]);
        // remaining rows unchanged
        for (unsigned fr = 1; fr < 4; ++fr)
            for (unsigned t = 0; t < 4; ++t) CHECK(m.cell[fr][t] == (fr == t));
    }
    SUBCASE("impulse sets full columns") {
        auto m = apply_disturbance(clean, Disturbance::Impulse, 1);
        for (unsigned fr = 0; fr < 4; ++fr) CHECK(m.cell[fr][1]);
    }
    SUBCASE("fading clears a row; background flips single cells") {
        auto m = apply_disturbance(clean, Disturbance::Fade, 2);
        for (unsigned t = 0; t < 4; ++t) CHECK(!m.cell[2][t]);
        auto i = apply_disturbance(clean, Disturbance::BackgroundInsert, 0, 2);
        CHECK(i.cell[0][2]);
        auto d = apply_disturbance(clean, Disturbance::BackgroundDelete, 0, 0);
        CHECK(!d.cell[0][0]);
    }
}

TEST_CASE("permutation code tables and the counting bound") {
    CHECK(perm_bound(4, 3) == doctest::Approx(12.0));
    CHECK(perm_bound(5, 4) == doctest::Approx(20.0));
    CHECK(perm_bound(3, 2) == doctest::Approx(6.0));
    auto t43 = perm_code(4, PermSource::Table, 3);
    CHECK(t43.codewords.size() == 12);
    for (size_t a = 0; a < t43.codewords.size(); ++a)
        for (size_t b = a + 1; b < t43.codewords.size(); ++b)
            CHECK(rsc::test::hamming(t43.codewords[a], t43.codewords[b]) >= 3);
}

TEST_CASE("rs-derived permutation code meets the bound") {
    for (unsigned M : {4u, 8u}) {
        auto code = perm_code(M, PermSource::RsDerived);
        CHECK(code.codewords.size() == (size_t)M * (M - 1));
        CHECK((double)code.codewords.size() == perm_bound(M, M - 1));
        unsigned dmin = M;
        for (size_t a = 0; a < code.codewords.size(); ++a) {
            // every word contains each symbol exactly once
            std::vector<bool> seen(M, false);
            for (Label v : code.codewords[a]) {
                CHECK(!seen[v]);
                seen[v] = true;
            }
            for (size_t b = a + 1; b < code.codewords.size(); ++b)
                dmin = std::min(dmin, rsc::test::hamming(code.codewords[a], code.codewords[b]));
        }
        CHECK(dmin == M - 1);
    }
}

TEST_CASE("exhaustive search reproduces the small code sizes") {
    CHECK(perm_search_max(2, 2) == 2);
    CHECK(perm_search_max(3, 2) == 6);
    CHECK(perm_search_max(3, 3) == 3);
    CHECK(perm_search_max(4, 2) == 24);
    CHECK(perm_search_max(4, 3) == 12);
    CHECK(perm_search_max(4, 4) == 4);
}

TEST_CASE("worked decoding examples for the d_min = 4 code") {
    auto code = perm_code(4, PermSource::Table, 4);
    // codeword (3,4,1,2) = index 2; narrowband on f4
    Vec w = code.codewords[2];
    CHECK(w == Vec{2, 3, 0, 1});
    auto matrix = mfsk_detect(ideal_envelopes(w, 4, 4.0), 4.0);
    auto nb = apply_disturbance(matrix, Disturbance::Narrowband, 3);
    // demodulator output {(3,4),(4),(1,4),(2,4)}
    CHECK(nb.column_set(0) == std::set<Label>{2, 3});
    CHECK(nb.column_set(1) == std::set<Label>{3});
    CHECK(nb.column_set(2) == std::set<Label>{0, 3});
    CHECK(nb.column_set(3) == std::set<Label>{1, 3});
    auto dec = perm_decode(code, nb);
    CHECK(dec.message == 2);
    CHECK(!dec.ambiguous);
    // impulse noise at t = 1,2: columns all-ones, still decodes
    auto imp = apply_disturbance(apply_disturbance(matrix, Disturbance::Impulse, 0),
                                 Disturbance::Impulse, 1);
    auto dec2 = perm_decode(code, imp);
    CHECK(dec2.message == 2);
    CHECK(!dec2.ambiguous);
}

TEST_CASE("d_min - 1 disturbances never break the rs-derived M=4 code") {
    auto code = perm_code(4, PermSource::RsDerived);
    double es = 4.0;
    for (unsigned idx = 0; idx < code.codewords.size(); ++idx) {
        const Vec& w = code.codewords[idx];
        auto clean = mfsk_detect(ideal_envelopes(w, 4, es), es);
        auto check = [&](const DetectionMatrix& m) {
            auto dec = perm_decode(code, m);
            CHECK(dec.message == idx);
            CHECK(!dec.ambiguous);
        };
        // pairs of same-type disturbances, exhaustive placements
        for (unsigned a = 0; a < 4; ++a)
            for (unsigned b = a + 1; b < 4; ++b) {
                check(apply_disturbance(apply_disturbance(clean, Disturbance::Narrowband, a),
                                        Disturbance::Narrowband, b));
                check(apply_disturbance(apply_disturbance(clean, Disturbance::Impulse, a),
                                        Disturbance::Impulse, b));
                check(apply_disturbance(apply_disturbance(clean, Disturbance::Fade, a),
                                        Disturbance::Fade, b));
            }
        // pairs of deletions (cells of the transmitted word)
        for (unsigned a = 0; a < 4; ++a)
            for (unsigned b = a + 1; b < 4; ++b)
                check(apply_disturbance(
                    apply_disturbance(clean, Disturbance::BackgroundDelete, w[a], a),
                    Disturbance::BackgroundDelete, w[b], b));
        // pairs of insertions into free cells
        for (unsigned f1 = 0; f1 < 4; ++f1)
            for (unsigned t1 = 0; t1 < 4; ++t1) {
                if (w[t1] == f1) continue;
                for (unsigned f2 = 0; f2 < 4; ++f2)
                    for (unsigned t2 = 0; t2 < 4; ++t2) {
                        if (w[t2] == f2) continue;
                        if (f2 * 4 + t2 <= f1 * 4 + t1) continue;
                        check(apply_disturbance(
                            apply_disturbance(clean, Disturbance::BackgroundInsert, f1, t1),
                            Disturbance::BackgroundInsert, f2, t2));
                    }
            }
    }
}

TEST_CASE("union bound and BER simulation sanity") {
    // uncoded BER at 6 dB close to Q(sqrt(2 Eb/N0))
    auto rep = ber_sim(BerScheme::Uncoded, 6.0, 200000, 9);
    double expect = cap::q_func(std::sqrt(2.0 * std::pow(10.0, 0.6)));
    auto m = rep.at("ber");
    CHECK(std::fabs(m.value - expect) <= 4.0 * m.stderr_ + 1e-9);
    // SPC soft decoding beats uncoded at the same Eb/N0
    auto spc = ber_sim(BerScheme::Spc, 6.0, 200000, 10);
    CHECK(spc.value("ber") < m.value);
}

TEST_CASE("per-symbol error rate follows the published slope") {
    // symbol error rate after the SPC stage, against C(m+1,2) Q(sqrt(2R Eb/(N0/2)))
    auto f = GaloisField::binary_default(5);
    RsCode code(f, 31, 21);
    RsSpcSymbolCodec codec(code);
    double R = codec.rate();
    auto measure = [&](double eb_n0_db) {
        double eb_n0 = std::pow(10.0, eb_n0_db / 10.0);
        double amp = std::sqrt(2.0 * R * eb_n0);
        std::uint64_t errors = 0, symbols = 0;
        for (unsigned block = 0; block < 800; ++block) {
            AwgnChannel ch(amp, 1.0, hash_seed(4242, block));
            Xoshiro256 rng(hash_seed(4243, block));
            Vec info(21);
            for (auto& v : info) v = (Label)rng.below(32);
            Bits tx = codec.encode(info);
            auto res = codec.decode(ch.transmit(tx));
            Vec sent = code.encode_systematic(info);
            for (unsigned j = 0; j < 31; ++j) {
                ++symbols;
                if (res.symbols[j] != sent[j]) ++errors;
            }
        }
        return (double)errors / (double)symbols;
    };
    auto formula = [&](double eb_n0_db) {
        double eb_n0 = std::pow(10.0, eb_n0_db / 10.0);
        return 15.0 * cap::q_func(std::sqrt(4.0 * R * eb_n0));
    };
    double m1 = measure(3.0), m2 = measure(5.0);
    double f1 = formula(3.0), f2 = formula(5.0);
    // slope comparison only: the measured log-ratio tracks the predicted one
    double measured_slope = std::log(m1 / m2);
    double predicted_slope = std::log(f1 / f2);
    CHECK(measured_slope == doctest::Approx(predicted_slope).epsilon(0.30));
}
