#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rscod/biometric.hpp"
#include "rscod/rng.hpp"
#include "rscod/sha256.hpp"

using namespace rsc;
using namespace rsc::bio;

TEST_CASE("sha-256 reference vectors") {
    auto d1 = Sha256::of("abc", 3);
    CHECK(Sha256::hex(d1) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    auto d2 = Sha256::of("", 0);
    CHECK(Sha256::hex(d2) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("syndrome reconstruction") {
    auto f = GaloisField::binary_default(3);
    RsCode code(f, 7, 3);
    Xoshiro256 rng(1);
    Vec b(7);
    for (auto& v : b) v = (Label)rng.below(8);
    Vec s = syndrome_enroll(b, code);
    CHECK(s == code.syndrome(b));
    // clean re-presentation is trivially reconstructed
    auto clean = syndrome_reconstruct(b, s, code);
    REQUIRE(clean.ok);
    CHECK(clean.biometric == b);
    // any 2 symbol errors are reconstructed exactly, exhaustive
    auto idx = rsc::test::first_subset(2);
    do {
        for (Label v1 = 1; v1 < 8; ++v1)
            for (Label v2 = 1; v2 < 8; ++v2) {
                Vec noisy = b;
                noisy[idx[0]] = f.add(noisy[idx[0]], v1);
                noisy[idx[1]] = f.add(noisy[idx[1]], v2);
                auto res = syndrome_reconstruct(noisy, s, code);
                REQUIRE(res.ok);
                CHECK(res.biometric == b);
            }
    } while (rsc::test::next_subset(idx, 7));
}

TEST_CASE("three errors never silently return the right vector") {
    auto f = GaloisField::binary_default(3);
    RsCode code(f, 7, 3);
    Vec b{1, 2, 3, 4, 5, 6, 7};
    Vec s = syndrome_enroll(b, code);
    unsigned failures = 0, wrong = 0, silent_right = 0;
    auto idx = rsc::test::first_subset(3);
    do {
        Vec noisy = b;
        for (size_t i : idx) noisy[i] = f.add(noisy[i], 3);
        auto res = syndrome_reconstruct(noisy, s, code);
        if (!res.ok)
            ++failures;
        else if (res.biometric != b)
            ++wrong;
        else
            ++silent_right;
    } while (rsc::test::next_subset(idx, 7));
    CHECK(silent_right == 0);
    CHECK(failures + wrong == 35);
}

TEST_CASE("JW accept/reject boundary is exact at the decoding radius") {
    auto f = GaloisField::binary_default(3);
    RsCode code(f, 7, 3);
    Vec b{7, 0, 2, 5, 1, 3, 3};
    auto rec = jw_enroll(b, code, 99);
    // weight <= 2: always accepted (all positions, all values)
    for (unsigned w = 0; w <= 2; ++w) {
        auto idx = rsc::test::first_subset(w);
        do {
            std::vector<Label> vals(w, 1);
            while (true) {
                Vec noisy = b;
                for (unsigned i = 0; i < w; ++i) noisy[idx[i]] = f.add(noisy[idx[i]], vals[i]);
                CHECK(jw_auth(rec, noisy, code).accepted);
                unsigned pos = 0;
                while (pos < w) {
                    vals[pos] = (Label)(vals[pos] % 7 + 1);
                    if (vals[pos] != 1) break;
                    ++pos;
                }
                if (pos == w) break;
            }
            if (w == 0) break;
        } while (rsc::test::next_subset(idx, 7));
    }
    // weight 3 (fixed values): always rejected
    auto idx = rsc::test::first_subset(3);
    do {
        Vec noisy = b;
        for (size_t i : idx) noisy[i] = f.add(noisy[i], 5);
        CHECK(!jw_auth(rec, noisy, code).accepted);
    } while (rsc::test::next_subset(idx, 7));
}

TEST_CASE("fixed-t scheme accepts while (t-k) >= 2r") {
    auto f = GaloisField::binary_default(3);
    RsCode code(f, 7, 3);
    Xoshiro256 rng(5);
    // r = 0: accept whenever t >= k
    for (unsigned t = 3; t <= 7; ++t) {
        Vec props;
        while (props.size() < t) {
            Label b = (Label)(1 + rng.below(7));
            if (std::find(props.begin(), props.end(), b) == props.end()) props.push_back(b);
        }
        auto rec = jw_fixed_t_enroll(props, code, 7 + t);
        CHECK(jw_fixed_t_auth(rec, props, code).accepted);
    }
    // t=5, k=3: r=1 guaranteed; r=2 not guaranteed (measured acceptance < 1)
    unsigned accept_r1 = 0, total_r1 = 0, accept_r2 = 0, total_r2 = 0;
    for (unsigned trial = 0; trial < 400; ++trial) {
        Xoshiro256 r2(hash_seed(17, trial));
        Vec props;
        while (props.size() < 5) {
            Label b = (Label)(1 + r2.below(7));
            if (std::find(props.begin(), props.end(), b) == props.end()) props.push_back(b);
        }
        auto rec = jw_fixed_t_enroll(props, code, hash_seed(18, trial));
        // r = 1: replace one property with a label outside the set
        Vec one = props;
        {
            Label cand;
            do {
                cand = (Label)(1 + r2.below(7));
            } while (std::find(props.begin(), props.end(), cand) != props.end());
            one[r2.below(5)] = cand;
            ++total_r1;
            if (jw_fixed_t_auth(rec, one, code).accepted) ++accept_r1;
        }
        // r = 2
        Vec two = props;
        {
            for (int rep = 0; rep < 2; ++rep) {
                Label cand;
                do {
                    cand = (Label)(1 + r2.below(7));
                } while (std::find(two.begin(), two.end(), cand) != two.end());
                two[rep] = cand;
            }
            ++total_r2;
            if (jw_fixed_t_auth(rec, two, code).accepted) ++accept_r2;
        }
    }
    CHECK(accept_r1 == total_r1);
    CHECK(accept_r2 < total_r2);
}

TEST_CASE("JS guess probability by exhaustive enumeration at (15,6,3)") {
    auto f = GaloisField::binary_default(4);
    RsCode code(f, 15, 3);
    Xoshiro256 rng(6);
    Vec props;
    while (props.size() < 6) {
        Label b = (Label)(1 + rng.below(15));
        if (std::find(props.begin(), props.end(), b) == props.end()) props.push_back(b);
    }
    auto rec = js_enroll(props, code, 777);
    std::vector<bool> pointed(15, false);
    for (Label b : props) pointed[f.log(b)] = true;
    // guess attack: pick k=3 of n positions, erasure-decode from them; the
    // guess succeeds iff all picked positions carry true evaluations
    unsigned success = 0, total = 0;
    auto idx = rsc::test::first_subset(3);
    do {
        ++total;
        std::vector<size_t> erasures;
        for (size_t j = 0; j < 15; ++j)
            if (std::find(idx.begin(), idx.end(), j) == idx.end()) erasures.push_back(j);
        auto res = code.decode_erasures(rec.payload, erasures);
        if (res.ok() && sha256_labels_hex(res.info) == rec.hash) ++success;
    } while (rsc::test::next_subset(idx, 15));
    CHECK(total == 455);
    CHECK(success == 20);  // C(6,3) pointed-position triples
    CHECK((double)success / total == doctest::Approx(binomial(6, 3) / binomial(15, 3)));
}

TEST_CASE("JS FAR formula flags the small-parameter regime") {
    auto v = far_frr_formulas(Scheme::JS, 7, 2, 4, 8, 0.01);
    CHECK(v.far == 1.0);  // 36/21 capped
    auto w = far_frr_formulas(Scheme::JS, 15, 3, 6, 16, 0.01);
    CHECK(w.far == doctest::Approx(400.0 / 455.0));
    CHECK(binomial(6, 3) * binomial(12, 3) / binomial(15, 6) ==
          doctest::Approx(400.0 / 455.0));  // the two published forms agree
}

TEST_CASE("JS impostor acceptance matches the overlap rule, exhaustive") {
    // accept exactly when the impostor points at >= (t+k)/2 true positions
    auto f = GaloisField::binary_default(3);
    RsCode code(f, 7, 3);  // n=7, k=3, t=5
    Xoshiro256 rng(7);
    Vec props;
    while (props.size() < 5) {
        Label b = (Label)(1 + rng.below(7));
        if (std::find(props.begin(), props.end(), b) == props.end()) props.push_back(b);
    }
    auto rec = js_enroll(props, code, 2024);
    unsigned accepted = 0, total = 0, bound_count = 0;
    auto idx = rsc::test::first_subset(5);
    do {
        Vec imp;
        for (size_t i : idx) imp.push_back(f.alpha_pow((long long)i));
        ++total;
        unsigned overlap = 0;
        for (Label b : imp)
            if (std::find(props.begin(), props.end(), b) != props.end()) ++overlap;
        // guaranteed-accept region: r = t - overlap with 2r <= t - k
        if (5 - overlap <= 1) ++bound_count;
        if (js_auth(rec, imp, code).accepted) ++accepted;
    } while (rsc::test::next_subset(idx, 7));
    CHECK(total == 21);
    CHECK(accepted >= bound_count);
    // measured acceptance stays below the closed-form bound
    double bound = far_frr_formulas(Scheme::JS, 7, 3, 5, 8, 0.0).far;
    CHECK((double)accepted / total <= bound + 1e-12);
}

TEST_CASE("Dodis variant stores t coefficients and matches JS decisions") {
    auto f = GaloisField::binary_default(4);
    RsCode code(f, 15, 3);
    Xoshiro256 rng(8);
    unsigned agreements = 0, trials = 1000;
    for (unsigned trial = 0; trial < trials; ++trial) {
        Xoshiro256 r2(hash_seed(31337, trial));
        Vec props;
        while (props.size() < 6) {
            Label b = (Label)(1 + r2.below(15));
            if (std::find(props.begin(), props.end(), b) == props.end()) props.push_back(b);
        }
        std::uint64_t sd = hash_seed(41, trial);
        auto js = js_enroll(props, code, sd);
        auto dodis = js_improved_enroll(props, 3, code, sd);
        CHECK(dodis.payload.size() == 6);
        // same noisy presentation for both schemes
        Vec noisy = props;
        unsigned r = (unsigned)r2.below(4);  // 0..3 wrong properties
        for (unsigned i = 0; i < r; ++i) {
            Label cand;
            do {
                cand = (Label)(1 + r2.below(15));
            } while (std::find(noisy.begin(), noisy.end(), cand) != noisy.end());
            noisy[i] = cand;
        }
        auto a = js_auth(js, noisy, code);
        auto b = js_improved_auth(dodis, noisy, code);
        if (a.accepted == b.accepted) ++agreements;
        if (a.accepted && b.accepted) CHECK(a.secret == b.secret);
        // exact-match property: Q(b_i) = P(b_i)
        if (r == 0) {
            CHECK(a.accepted);
            CHECK(b.accepted);
        }
    }
    CHECK(agreements == trials);
}

TEST_CASE("closed-form FAR/FRR values") {
    // the worked sum: C(7,0)+C(7,1)+C(7,2), scaled by 8^-4
    auto v = far_frr_formulas(Scheme::Syndrome, 7, 3, 0, 8, 0.01);
    CHECK(v.far == doctest::Approx(29.0 / 4096.0));
    CHECK(v.guess_lower == doctest::Approx(std::pow(8.0, -3.0)));
    // FRR at p=0 is zero
    CHECK(far_frr_formulas(Scheme::JW, 7, 3, 0, 8, 0.0).frr == 0.0);
    // FRR slope: log-ratio across p in {0.01, 0.05} close to t+1 = 3
    double f1 = far_frr_formulas(Scheme::JW, 7, 3, 0, 8, 0.01).frr;
    double f2 = far_frr_formulas(Scheme::JW, 7, 3, 0, 8, 0.05).frr;
    double slope = std::log(f2 / f1) / std::log(5.0);
    CHECK(slope == doctest::Approx(3.0).epsilon(0.07));
    // order-of-magnitude agreement with (np)^(floor((n-k)/2)+1)
    CHECK(f2 / std::pow(7.0 * 0.05, 3.0) > 0.01);
    CHECK(f2 / std::pow(7.0 * 0.05, 3.0) < 1.0);
}

TEST_CASE("Monte-Carlo FAR stays below the closed-form bounds") {
    auto f = GaloisField::binary_default(4);
    RsCode code(f, 15, 3);
    {
        auto rep = far_sim(Scheme::JS, code, 6, 4000, 12);
        auto m = rep.at("far");
        double bound = far_frr_formulas(Scheme::JS, 15, 3, 6, 16, 0).far;
        CHECK(m.value <= bound + 3.0 * m.stderr_);
    }
    {
        auto rep = far_sim(Scheme::JW, code, 0, 4000, 13);
        auto m = rep.at("far");
        double bound = far_frr_formulas(Scheme::JW, 15, 3, 0, 16, 0).far;
        CHECK(m.value <= bound + 3.0 * m.stderr_ + 1e-9);
    }
    {
        auto rep = far_sim(Scheme::Syndrome, code, 0, 2000, 14);
        auto m = rep.at("far");
        double bound = far_frr_formulas(Scheme::Syndrome, 15, 3, 0, 16, 0).far;
        CHECK(m.value <= bound + 3.0 * m.stderr_ + 1e-9);
    }
}

TEST_CASE("FRR Monte Carlo against the closed form") {
    auto f = GaloisField::binary_default(3);
    RsCode code(f, 7, 3);
    auto rep = frr_sim(Scheme::JW, code, 0, 0.05, 30000, 15);
    auto m = rep.at("frr");
    double expect = far_frr_formulas(Scheme::JW, 7, 3, 0, 8, 0.05).frr;
    CHECK(std::fabs(m.value - expect) <= 4.0 * m.stderr_ + 1e-6);
}

TEST_CASE("fixed-t JW and JS coincide on paired trials") {
    // with a biometric of exactly t properties the two schemes are the same
    auto f = GaloisField::binary_default(4);
    RsCode code(f, 15, 3);
    for (unsigned trial = 0; trial < 200; ++trial) {
        Xoshiro256 rng(hash_seed(616, trial));
        Vec props;
        while (props.size() < 6) {
            Label b = (Label)(1 + rng.below(15));
            if (std::find(props.begin(), props.end(), b) == props.end()) props.push_back(b);
        }
        std::uint64_t sd = hash_seed(617, trial);
        auto a = jw_fixed_t_enroll(props, code, sd);
        auto b = js_enroll(props, code, sd);
        CHECK(a.payload == b.payload);
        Vec noisy = props;
        unsigned wrong = (unsigned)rng.below(3);
        for (unsigned i = 0; i < wrong; ++i) {
            Label cand;
            do {
                cand = (Label)(1 + rng.below(15));
            } while (std::find(noisy.begin(), noisy.end(), cand) != noisy.end());
            noisy[i] = cand;
        }
        auto ra = jw_fixed_t_auth(a, noisy, code);
        auto rb = js_auth(b, noisy, code);
        CHECK(ra.accepted == rb.accepted);
        if (ra.accepted) CHECK(ra.secret == rb.secret);
    }
}
