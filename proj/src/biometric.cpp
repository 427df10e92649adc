#include "rscod/biometric.hpp"

#include <algorithm>
#include <cmath>

#include "rscod/rng.hpp"
#include "rscod/sha256.hpp"

namespace rsc {
namespace bio {

Vec syndrome_enroll(const Vec& biometric, const RsCode& code) {
    return code.syndrome(biometric);
}

Reconstruct syndrome_reconstruct(const Vec& noisy, const Vec& stored, const RsCode& code) {
    const GaloisField& f = code.field();
    Vec s = code.syndrome(noisy);
    Vec es(s.size());
    for (size_t i = 0; i < s.size(); ++i) es[i] = f.sub(s[i], stored[i]);
    auto res = code.decode_syndrome(es);
    Reconstruct out;
    out.ok = res.ok();
    if (!res.ok()) return out;
    out.biometric = noisy;
    for (size_t i = 0; i < res.error_positions.size(); ++i) {
        size_t p = res.error_positions[i];
        out.biometric[p] = f.sub(out.biometric[p], res.error_values[i]);
    }
    return out;
}

namespace {

Vec random_secret(const GaloisField& f, unsigned k, Xoshiro256& rng) {
    Vec p(k);
    for (auto& v : p) v = (Label)rng.below(f.q());
    return p;
}

// label b != 0 points at position log_alpha(b)
size_t property_position(const GaloisField& f, Label b) {
    if (b == 0) throw BadParameters("property labels must be nonzero");
    return f.log(b);
}

void check_distinct(const Vec& props) {
    Vec s = props;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw BadParameters("property values must be pairwise distinct");
}

}  // namespace

VaultRecord jw_enroll(const Vec& biometric, const RsCode& code, std::uint64_t seed) {
    if (biometric.size() != code.n()) throw BadParameters("biometric length must be n");
    const GaloisField& f = code.field();
    Xoshiro256 rng(seed);
    Vec p = random_secret(f, code.k(), rng);
    Vec cw = code.encode_matrix(p);
    VaultRecord rec;
    rec.scheme = Scheme::JW;
    rec.n = code.n();
    rec.k = code.k();
    rec.payload = vec_add(f, biometric, cw);
    rec.hash = sha256_labels_hex(p);
    return rec;
}

AuthResult jw_auth(const VaultRecord& rec, const Vec& noisy, const RsCode& code) {
    const GaloisField& f = code.field();
    Vec y = vec_sub(f, rec.payload, noisy);  // c + (b - b~)
    auto res = code.decode_errors(y);
    AuthResult out{false, {}};
    if (!res.ok()) return out;
    if (sha256_labels_hex(res.info) != rec.hash) return out;
    out.accepted = true;
    out.secret = res.info;
    return out;
}

namespace {

VaultRecord altered_codeword_enroll(Scheme scheme, const Vec& props, const RsCode& code,
                                    std::uint64_t seed) {
    check_distinct(props);
    const GaloisField& f = code.field();
    unsigned n = code.n(), k = code.k(), t = (unsigned)props.size();
    if (t < k || t > n) throw BadParameters("need k <= t <= n properties");
    Xoshiro256 rng(seed);
    Vec p = random_secret(f, k, rng);
    Vec cw = code.encode_matrix(p);  // c_j = P(alpha^j)
    std::vector<bool> pointed(n, false);
    for (Label b : props) pointed[property_position(f, b)] = true;
    Vec stored = cw;
    for (unsigned j = 0; j < n; ++j) {
        if (pointed[j]) continue;
        // chaff: uniform over the q-1 values different from the evaluation
        Label off = (Label)(1 + rng.below(f.q() - 1));
        stored[j] = f.add(cw[j], off);
    }
    VaultRecord rec;
    rec.scheme = scheme;
    rec.n = n;
    rec.k = k;
    rec.t = t;
    rec.payload = stored;
    rec.hash = sha256_labels_hex(p);
    return rec;
}

AuthResult altered_codeword_auth(const VaultRecord& rec, const Vec& props, const RsCode& code) {
    check_distinct(props);
    const GaloisField& f = code.field();
    unsigned n = code.n();
    AuthResult out{false, {}};
    if (props.size() != rec.t) return out;
    std::vector<bool> pointed(n, false);
    for (Label b : props) pointed[property_position(f, b)] = true;
    std::vector<size_t> erasures;
    for (unsigned j = 0; j < n; ++j)
        if (!pointed[j]) erasures.push_back(j);
    if (erasures.size() > (size_t)(code.d_min() - 1)) return out;
    auto res = code.decode_errors_and_erasures(rec.payload, erasures);
    if (!res.ok()) return out;
    if (sha256_labels_hex(res.info) != rec.hash) return out;
    out.accepted = true;
    out.secret = res.info;
    return out;
}

}  // namespace

VaultRecord jw_fixed_t_enroll(const Vec& props, const RsCode& code, std::uint64_t seed) {
    return altered_codeword_enroll(Scheme::JWFixedT, props, code, seed);
}

AuthResult jw_fixed_t_auth(const VaultRecord& rec, const Vec& props, const RsCode& code) {
    return altered_codeword_auth(rec, props, code);
}

VaultRecord js_enroll(const Vec& props, const RsCode& code, std::uint64_t seed) {
    return altered_codeword_enroll(Scheme::JS, props, code, seed);
}

AuthResult js_auth(const VaultRecord& rec, const Vec& props, const RsCode& code) {
    return altered_codeword_auth(rec, props, code);
}

VaultRecord js_improved_enroll(const Vec& props, unsigned k, const RsCode& code,
                               std::uint64_t seed) {
    check_distinct(props);
    const GaloisField& f = code.field();
    unsigned t = (unsigned)props.size();
    if (k >= t) throw BadParameters("need deg P = k-1 < t");
    for (Label b : props) property_position(f, b);  // validates nonzero
    Xoshiro256 rng(seed);
    Vec p = random_secret(f, k, rng);
    // Q(X) = P(X) + (X - b_1)...(X - b_t); the top coefficient is monic
    Vec q{1};
    for (Label b : props) q = poly_mul(f, q, Vec{f.neg(b), 1});
    Vec qp = poly_add(f, q, p);
    qp.resize(t + 1, 0);
    VaultRecord rec;
    rec.scheme = Scheme::JSDodis;
    rec.n = code.n();
    rec.k = k;
    rec.t = t;
    rec.payload.assign(qp.begin(), qp.begin() + t);  // monic top implied
    rec.hash = sha256_labels_hex(p);
    return rec;
}

AuthResult js_improved_auth(const VaultRecord& rec, const Vec& props, const RsCode& code) {
    check_distinct(props);
    const GaloisField& f = code.field();
    unsigned n = code.n();
    AuthResult out{false, {}};
    if (props.size() != rec.t) return out;
    Vec q = rec.payload;
    q.push_back(1);  // restore the monic term
    // received word: Q(b~) at the pointed positions, erasures elsewhere
    Vec r(n, 0);
    std::vector<bool> pointed(n, false);
    for (Label b : props) {
        size_t pos = property_position(f, b);
        pointed[pos] = true;
        r[pos] = poly_eval(f, q, b);
    }
    std::vector<size_t> erasures;
    for (unsigned j = 0; j < n; ++j)
        if (!pointed[j]) erasures.push_back(j);
    if (erasures.size() > (size_t)(code.d_min() - 1)) return out;
    auto res = code.decode_errors_and_erasures(r, erasures);
    if (!res.ok()) return out;
    if (sha256_labels_hex(res.info) != rec.hash) return out;
    out.accepted = true;
    out.secret = res.info;
    return out;
}

double binomial(unsigned n, unsigned k) {
    if (k > n) return 0.0;
    double v = 1;
    for (unsigned i = 0; i < k; ++i) v *= (double)(n - i) / (double)(i + 1);
    return v;
}

FarFrr far_frr_formulas(Scheme scheme, unsigned n, unsigned k, unsigned t, unsigned q, double p,
                        double max_pb) {
    FarFrr out;
    unsigned tcap = (n - k) / 2;
    auto tail = [&](unsigned len, unsigned from, double prob) {
        double v = 0;
        for (unsigned i = from; i <= len; ++i)
            v += binomial(len, i) * std::pow(prob, (double)i) * std::pow(1.0 - prob, (double)(len - i));
        return v;
    };
    switch (scheme) {
        case Scheme::Syndrome: {
            double far = 0;
            for (unsigned i = 0; i <= tcap; ++i) far += binomial(n, i);
            out.far = far * std::pow((double)(n + 1), -(double)(n - k));
            out.frr = tail(n, tcap + 1, p);
            out.guess_lower = std::pow((double)q, -(double)k);
            out.guess_upper = std::min(1.0, std::pow((double)q, (double)(n - k)) * max_pb);
            break;
        }
        case Scheme::JW: {
            double far = 0;
            for (unsigned i = 0; i <= tcap; ++i) far += binomial(n, i);
            out.far = far * std::pow((double)(n + 1), -(double)n);
            out.frr = tail(n, tcap + 1, p);
            out.guess_lower = std::pow((double)q, -(double)k);
            out.guess_upper = std::min(1.0, std::pow((double)q, (double)(n - k)) * max_pb);
            break;
        }
        case Scheme::JWFixedT:
        case Scheme::JS:
        case Scheme::JSDodis: {
            out.far = std::min(1.0, binomial(t, k) * binomial(n - k, t - k) / binomial(n, t));
            unsigned rcap = (t - k) / 2;
            out.frr = tail(t, rcap + 1, p);
            out.guess_lower = std::pow((double)q, -(double)k);
            out.guess_upper = std::min(
                1.0, std::pow((double)q / (q - 1.0), (double)n) *
                         std::pow((double)q, (double)t - (double)k) * max_pb);
            break;
        }
    }
    return out;
}

namespace {

Vec random_property_set(const GaloisField& f, unsigned t, Xoshiro256& rng) {
    Vec props;
    while (props.size() < t) {
        Label b = (Label)(1 + rng.below(f.q() - 1));
        if (std::find(props.begin(), props.end(), b) == props.end()) props.push_back(b);
    }
    return props;
}

}  // namespace

SimReport far_sim(Scheme scheme, const RsCode& code, unsigned t, std::uint64_t trials,
                  std::uint64_t seed) {
    const GaloisField& f = code.field();
    SimReport rep;
    rep.name = "far";
    rep.seed = seed;
    Xoshiro256 enroll_rng(hash_seed(seed, 0));
    std::uint64_t accepted = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Xoshiro256 rng(hash_seed(seed, trial + 1));
        switch (scheme) {
            case Scheme::Syndrome: {
                Vec b(code.n());
                for (auto& v : b) v = (Label)enroll_rng.below(f.q());
                Vec s = syndrome_enroll(b, code);
                Vec imp(code.n());
                for (auto& v : imp) v = (Label)rng.below(f.q());
                auto res = syndrome_reconstruct(imp, s, code);
                if (res.ok) ++accepted;
                break;
            }
            case Scheme::JW: {
                Vec b(code.n());
                for (auto& v : b) v = (Label)enroll_rng.below(f.q());
                auto rec = jw_enroll(b, code, hash_seed(seed ^ 0xabc, trial));
                Vec imp(code.n());
                for (auto& v : imp) v = (Label)rng.below(f.q());
                if (jw_auth(rec, imp, code).accepted) ++accepted;
                break;
            }
            case Scheme::JWFixedT:
            case Scheme::JS: {
                Vec b = random_property_set(f, t, enroll_rng);
                auto rec = js_enroll(b, code, hash_seed(seed ^ 0xabc, trial));
                Vec imp = random_property_set(f, t, rng);
                if (js_auth(rec, imp, code).accepted) ++accepted;
                break;
            }
            case Scheme::JSDodis: {
                Vec b = random_property_set(f, t, enroll_rng);
                auto rec = js_improved_enroll(b, code.k(), code, hash_seed(seed ^ 0xabc, trial));
                Vec imp = random_property_set(f, t, rng);
                if (js_improved_auth(rec, imp, code).accepted) ++accepted;
                break;
            }
        }
    }
    rep.metrics["far"] = bernoulli_metric(accepted, trials);
    return rep;
}

SimReport frr_sim(Scheme scheme, const RsCode& code, unsigned t, double p, std::uint64_t trials,
                  std::uint64_t seed) {
    const GaloisField& f = code.field();
    SimReport rep;
    rep.name = "frr";
    rep.seed = seed;
    std::uint64_t rejected = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Xoshiro256 rng(hash_seed(seed, trial));
        if (scheme == Scheme::Syndrome || scheme == Scheme::JW) {
            Vec b(code.n());
            for (auto& v : b) v = (Label)rng.below(f.q());
            Vec noisy = b;
            for (auto& v : noisy)
                if (rng.bernoulli(p)) v = f.add(v, (Label)(1 + rng.below(f.q() - 1)));
            if (scheme == Scheme::Syndrome) {
                Vec s = syndrome_enroll(b, code);
                auto res = syndrome_reconstruct(noisy, s, code);
                if (!res.ok || res.biometric != b) ++rejected;
            } else {
                auto rec = jw_enroll(b, code, hash_seed(seed ^ 0xdef, trial));
                if (!jw_auth(rec, noisy, code).accepted) ++rejected;
            }
        } else {
            Vec b = random_property_set(f, t, rng);
            Vec noisy = b;
            for (auto& v : noisy) {
                if (!rng.bernoulli(p)) continue;
                // replace by a random different label, keeping distinctness
                Label cand;
                do {
                    cand = (Label)(1 + rng.below(f.q() - 1));
                } while (std::find(noisy.begin(), noisy.end(), cand) != noisy.end());
                v = cand;
            }
            if (scheme == Scheme::JSDodis) {
                auto rec = js_improved_enroll(b, code.k(), code, hash_seed(seed ^ 0xdef, trial));
                if (!js_improved_auth(rec, noisy, code).accepted) ++rejected;
            } else {
                auto rec = js_enroll(b, code, hash_seed(seed ^ 0xdef, trial));
                if (!js_auth(rec, noisy, code).accepted) ++rejected;
            }
        }
    }
    rep.metrics["frr"] = bernoulli_metric(rejected, trials);
    return rep;
}

}  // namespace bio
}  // namespace rsc
