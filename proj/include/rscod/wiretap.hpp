#ifndef RSCOD_WIRETAP_HPP
#define RSCOD_WIRETAP_HPP

#include <cstdint>
#include <vector>

#include "rscod/report.hpp"
#include "rscod/rs.hpp"

namespace rsc {
namespace wiretap {

// main-channel error probability p, wiretap error probability q (model A)
struct WiretapParams {
    double p = 0.0;
    double q = 0.5;
};
// model B tandem channels (p then q') convert to model A
double model_b_to_a(double p, double q_prime);

double secrecy_capacity(double p, double q);       // h(q) - h(p), bit/symbol
double secrecy_capacity_plus(double p, double q);  // h(p qbar + q pbar) - h(p)
// maximum equivocation fraction at information rate R (bit/symbol)
double rd_region_delta(double p, double q, double R);

// one secret bit on the parity of a length-n SPC word
double spc_attacker_error(unsigned n, double p);  // (1 - (1-2p)^n)/2
SimReport spc_secret_sim(unsigned n, double p, std::uint64_t trials, std::uint64_t seed);

// (7,4) Hamming code with three secret bits on the check positions
struct HammingSecret {
    Mat G;   // 4x7 encoding matrix
    Mat HT;  // 7x3 syndrome former
    HammingSecret();
    std::vector<int> encode(const std::vector<int>& msg4, const std::vector<int>& secret3) const;
    std::vector<int> attacker_estimate(const std::vector<int>& received) const;  // syndrome
    std::vector<unsigned> weight_distribution() const;  // A_0..A_7
    double attacker_error(double p) const;              // 1 - sum A_i p^i (1-p)^(7-i)
};

// RS secret embedding on a noiseless main channel: x = m G_sys + (0^k, s)
struct RsSecretNoiseless {
    const RsCode& code;
    explicit RsSecretNoiseless(const RsCode& c) : code(c) {}
    Vec encode(const Vec& msg, const Vec& secret) const;
    // legal receiver reads m from the systematic part and strips the codeword
    std::pair<Vec, Vec> legal_decode(const Vec& received) const;
    // attacker syndrome equals secret plus noise syndrome
    Vec attacker_estimate(const Vec& observed) const;
    Mat syndrome_former() const;  // [T; I] for G_sys = [I | T]
};

// noisy main channel via the semi-systematic form [I_u T U; 0 I_v W]
class RsSecretNoisy {
public:
    RsSecretNoisy(const RsCode& c, unsigned u);
    unsigned u() const { return u_; }
    unsigned v() const { return v_; }
    Vec encode(const Vec& msg_u, const Vec& secret_v) const;
    struct Legal {
        bool ok;
        Vec msg;
        Vec secret;
    };
    Legal legal_decode(const Vec& received) const;  // RS decode then read
    // attacker syndrome: (s^v, 0^(n-k)) + e H^T
    Vec attacker_syndrome(const Vec& observed) const;
    Vec attacker_estimate(const Vec& observed) const;  // first v symbols
    const Mat& gs() const { return gs_; }
    const Mat& ht() const { return ht_; }  // n x (n-u) former for the top block

private:
    const RsCode& code_;
    unsigned u_, v_;
    Mat gs_;  // semi-systematic generator
    Mat ht_;
};

// wiretap channel of type II: equivocation over all size-mu observation sets
// cap: exact enumeration while C(n,mu) <= limit, else sampled (flagged)
struct Equivocation {
    double symbols;  // residual uncertainty in q-ary symbols
    bool exact;
};
Equivocation wiretap2_equivocation(const RsCode& code, unsigned mu, std::uint64_t limit = 10000000);
// inverse dimension/length profile k_mu(C) = min over mu-subsets of rank
struct Idlp {
    std::vector<unsigned> profile;  // mu = 0..n
    bool exact;
};
Idlp idlp(const GaloisField& f, const Mat& G, std::uint64_t limit = 10000000);

}  // namespace wiretap
}  // namespace rsc

#endif
