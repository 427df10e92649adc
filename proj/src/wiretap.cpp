#include "rscod/wiretap.hpp"

#include <algorithm>
#include <cmath>

#include "rscod/capacity.hpp"
#include "rscod/rng.hpp"

namespace rsc {
namespace wiretap {

double model_b_to_a(double p, double q_prime) {
    if (p >= 0.5) throw BadParameters("main channel must have p < 1/2");
    return (q_prime - p) / (1.0 - 2.0 * p);
}

double secrecy_capacity(double p, double q) { return cap::h2(q) - cap::h2(p); }

double secrecy_capacity_plus(double p, double q) {
    double cross = p * (1.0 - q) + q * (1.0 - p);
    return cap::h2(cross) - cap::h2(p);
}

double rd_region_delta(double p, double q, double R) {
    if (R <= 0) throw BadParameters("rate must be positive");
    return std::min(1.0, secrecy_capacity(p, q) / R);
}

double spc_attacker_error(unsigned n, double p) {
    return 0.5 * (1.0 - std::pow(1.0 - 2.0 * p, (double)n));
}

SimReport spc_secret_sim(unsigned n, double p, std::uint64_t trials, std::uint64_t seed) {
    SimReport rep;
    rep.name = "spc-secret";
    rep.seed = seed;
    std::uint64_t wrong = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Xoshiro256 rng(hash_seed(seed, t));
        // secret on the parity bit; attacker sums the noisy word
        int secret = (int)rng.below(2);
        int parity_sum = secret;  // data parity cancels in the sum
        for (unsigned i = 0; i < n; ++i)
            if (rng.bernoulli(p)) parity_sum ^= 1;
        if (parity_sum != secret) ++wrong;
    }
    rep.metrics["attacker_error"] = bernoulli_metric(wrong, trials);
    rep.put("formula", spc_attacker_error(n, p));
    return rep;
}

HammingSecret::HammingSecret() : G(4, 7), HT(7, 3) {
    Label g[4][7] = {{1, 0, 0, 0, 1, 1, 1},
                     {0, 1, 0, 0, 1, 1, 0},
                     {0, 0, 1, 0, 1, 0, 1},
                     {0, 0, 0, 1, 0, 1, 1}};
    Label h[7][3] = {{1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 7; ++j) G(i, j) = g[i][j];
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 3; ++j) HT(i, j) = h[i][j];
}

std::vector<int> HammingSecret::encode(const std::vector<int>& msg4,
                                       const std::vector<int>& secret3) const {
    std::vector<int> x(7, 0);
    for (int j = 0; j < 7; ++j)
        for (int i = 0; i < 4; ++i) x[j] ^= msg4[i] & G(i, j);
    for (int j = 0; j < 3; ++j) x[4 + j] ^= secret3[j];
    return x;
}

std::vector<int> HammingSecret::attacker_estimate(const std::vector<int>& received) const {
    std::vector<int> s(3, 0);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 7; ++i) s[j] ^= received[i] & HT(i, j);
    return s;
}

std::vector<unsigned> HammingSecret::weight_distribution() const {
    std::vector<unsigned> A(8, 0);
    for (unsigned m = 0; m < 16; ++m) {
        std::vector<int> x(7, 0);
        for (int j = 0; j < 7; ++j)
            for (int i = 0; i < 4; ++i) x[j] ^= ((m >> i) & 1) & G(i, j);
        unsigned w = 0;
        for (int b : x) w += (unsigned)b;
        ++A[w];
    }
    return A;
}

double HammingSecret::attacker_error(double p) const {
    auto A = weight_distribution();
    double ok = 0;
    for (unsigned i = 0; i <= 7; ++i)
        ok += (double)A[i] * std::pow(p, (double)i) * std::pow(1.0 - p, 7.0 - i);
    return 1.0 - ok;
}

Vec RsSecretNoiseless::encode(const Vec& msg, const Vec& secret) const {
    unsigned k = code.k(), n = code.n();
    if (msg.size() != k || secret.size() != n - k) throw BadParameters("length mismatch");
    const GaloisField& f = code.field();
    Vec x = code.encode_systematic(msg);
    for (unsigned j = 0; j < n - k; ++j) x[k + j] = f.add(x[k + j], secret[j]);
    return x;
}

std::pair<Vec, Vec> RsSecretNoiseless::legal_decode(const Vec& received) const {
    unsigned k = code.k(), n = code.n();
    const GaloisField& f = code.field();
    Vec msg(received.begin(), received.begin() + k);
    Vec cw = code.encode_systematic(msg);
    Vec secret(n - k);
    for (unsigned j = 0; j < n - k; ++j) secret[j] = f.sub(received[k + j], cw[k + j]);
    return {msg, secret};
}

Mat RsSecretNoiseless::syndrome_former() const {
    unsigned k = code.k(), n = code.n();
    Mat ht(n, n - k);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < n - k; ++j) ht(i, j) = code.G_sys()(i, k + j);
    for (unsigned j = 0; j < n - k; ++j) ht(k + j, j) = 1;
    return ht;
}

Vec RsSecretNoiseless::attacker_estimate(const Vec& observed) const {
    return vec_mat(code.field(), observed, syndrome_former());
}

RsSecretNoisy::RsSecretNoisy(const RsCode& c, unsigned u) : code_(c), u_(u), v_(c.k() - u) {
    if (u < 1 || u >= c.k()) throw BadParameters("require 1 <= u < k");
    gs_ = c.semi_systematic(u);
    // H^T = [T, U+TW; I_v, W; 0, I_{n-k}] annihilates the top block [I_u T U]
    unsigned n = c.n(), k = c.k();
    const GaloisField& f = c.field();
    Mat T(u_, v_), U(u_, n - k), W(v_, n - k);
    for (unsigned i = 0; i < u_; ++i) {
        for (unsigned j = 0; j < v_; ++j) T(i, j) = gs_(i, u_ + j);
        for (unsigned j = 0; j < n - k; ++j) U(i, j) = gs_(i, k + j);
    }
    for (unsigned i = 0; i < v_; ++i)
        for (unsigned j = 0; j < n - k; ++j) W(i, j) = gs_(u_ + i, k + j);
    Mat TW = mat_mul(f, T, W);
    ht_ = Mat(n, n - u_);
    for (unsigned i = 0; i < u_; ++i) {
        for (unsigned j = 0; j < v_; ++j) ht_(i, j) = T(i, j);
        for (unsigned j = 0; j < n - k; ++j) ht_(i, v_ + j) = f.add(U(i, j), TW(i, j));
    }
    for (unsigned i = 0; i < v_; ++i) {
        ht_(u_ + i, i) = 1;
        for (unsigned j = 0; j < n - k; ++j) ht_(u_ + i, v_ + j) = W(i, j);
    }
    for (unsigned j = 0; j < n - k; ++j) ht_(k + j, v_ + j) = 1;
}

Vec RsSecretNoisy::encode(const Vec& msg_u, const Vec& secret_v) const {
    if (msg_u.size() != u_ || secret_v.size() != v_) throw BadParameters("length mismatch");
    Vec x(u_ + v_);
    std::copy(msg_u.begin(), msg_u.end(), x.begin());
    std::copy(secret_v.begin(), secret_v.end(), x.begin() + u_);
    return vec_mat(code_.field(), x, gs_);
}

RsSecretNoisy::Legal RsSecretNoisy::legal_decode(const Vec& received) const {
    Legal out;
    auto res = code_.decode_errors(received);
    out.ok = res.ok();
    if (!out.ok) return out;
    const GaloisField& f = code_.field();
    const Vec& c = res.codeword;
    out.msg.assign(c.begin(), c.begin() + u_);
    // secret = middle coordinates minus m T
    out.secret.assign(v_, 0);
    for (unsigned j = 0; j < v_; ++j) {
        Label mt = 0;
        for (unsigned i = 0; i < u_; ++i) mt = f.add(mt, f.mul(out.msg[i], gs_(i, u_ + j)));
        out.secret[j] = f.sub(c[u_ + j], mt);
    }
    return out;
}

Vec RsSecretNoisy::attacker_syndrome(const Vec& observed) const {
    return vec_mat(code_.field(), observed, ht_);
}

Vec RsSecretNoisy::attacker_estimate(const Vec& observed) const {
    Vec z = attacker_syndrome(observed);
    return Vec(z.begin(), z.begin() + v_);
}

namespace {

bool next_subset_idx(std::vector<size_t>& idx, size_t n) {
    size_t t = idx.size();
    size_t i = t;
    while (i > 0) {
        --i;
        if (idx[i] + (t - i) < n) {
            ++idx[i];
            for (size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

double binom(unsigned n, unsigned k) {
    double v = 1;
    for (unsigned i = 0; i < k; ++i) v *= (double)(n - i) / (double)(i + 1);
    return v;
}

}  // namespace

Idlp idlp(const GaloisField& f, const Mat& G, std::uint64_t limit) {
    unsigned n = (unsigned)G.cols, k = (unsigned)G.rows;
    Idlp out;
    out.exact = true;
    out.profile.assign(n + 1, 0);
    Xoshiro256 rng(0x1d1b);
    for (unsigned mu = 1; mu <= n; ++mu) {
        unsigned best = k;
        if (binom(n, mu) <= (double)limit) {
            std::vector<size_t> idx(mu);
            for (unsigned i = 0; i < mu; ++i) idx[i] = i;
            do {
                best = std::min(best, (unsigned)mat_rank(f, G.columns(idx)));
            } while (next_subset_idx(idx, n));
        } else {
            out.exact = false;  // sampled lower-bound mode
            for (int trial = 0; trial < 2000; ++trial) {
                std::vector<size_t> idx;
                while (idx.size() < mu) {
                    size_t c = rng.below(n);
                    if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
                }
                best = std::min(best, (unsigned)mat_rank(f, G.columns(idx)));
            }
        }
        out.profile[mu] = best;
    }
    return out;
}

Equivocation wiretap2_equivocation(const RsCode& code, unsigned mu, std::uint64_t limit) {
    // unresolved secret symbols for the scheme y = x G_sys + (0^k, s):
    // (n-k) - mu + min_rank over mu-column selections of G
    unsigned n = code.n(), k = code.k();
    if (mu > n) throw BadParameters("mu <= n");
    Equivocation out;
    if (mu == 0) {
        out.symbols = (double)(n - k);
        out.exact = true;
        return out;
    }
    const GaloisField& f = code.field();
    unsigned best = k;
    out.exact = binom(n, mu) <= (double)limit;
    if (out.exact) {
        std::vector<size_t> idx(mu);
        for (unsigned i = 0; i < mu; ++i) idx[i] = i;
        do {
            best = std::min(best, (unsigned)mat_rank(f, code.G().columns(idx)));
        } while (next_subset_idx(idx, n));
    } else {
        Xoshiro256 rng(0xe9u + mu);
        for (int trial = 0; trial < 2000; ++trial) {
            std::vector<size_t> idx;
            while (idx.size() < mu) {
                size_t c = rng.below(n);
                if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
            }
            best = std::min(best, (unsigned)mat_rank(f, code.G().columns(idx)));
        }
    }
    out.symbols = (double)(n - k) - (double)mu + (double)best;
    return out;
}

}  // namespace wiretap
}  // namespace rsc
