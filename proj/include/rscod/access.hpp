#ifndef RSCOD_ACCESS_HPP
#define RSCOD_ACCESS_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "rscod/report.hpp"
#include "rscod/rs.hpp"

namespace rsc {
namespace access {

struct AccessParams {
    unsigned T = 1;  // active users
    unsigned U = 1;  // potential users
    unsigned Z = 1;  // parallel channels / array rows
    unsigned M = 2;  // alphabet / frequency count
    unsigned L = 1;  // signature length
    double p = 0.5;  // per-slot transmit probability
    double G() const { return p * (double)T; }
};

// slotted Aloha: eta = pT(1-p)^(T-1)
double aloha(const AccessParams& params);
SimReport aloha_sim(const AccessParams& params, std::uint64_t slots, std::uint64_t seed);

// feedback-free array access on Z parallel channels with an (n,k) column code
double expected_collisions(const AccessParams& params, unsigned n);
double row_collision_probability(const AccessParams& params);
double array_access_efficiency(const AccessParams& params);  // (T/Z)((Z-1)/Z)^(T-1)
SimReport array_access_sim(const AccessParams& params, const RsCode& column_code, unsigned N,
                           std::uint64_t blocks, std::uint64_t seed);

// binary OR channel rate T(h(p^T) - p h(p^(T-1))); p = idle-symbol probability
double or_channel_rate(unsigned T, double p);
// M-ary entry point: binary formula for M = 2, exact evaluator otherwise
double or_channel_rate(unsigned M, unsigned T, double p);
// exact T-user mutual information of the M-ary OR channel at the asymmetric
// distribution (prob0 on the common symbol, rest uniform); total rate T*I
double or_mary_rate(unsigned M, unsigned T, double prob0);
struct OrOptimum {
    double p;     // maximizing idle probability (binary) or common-symbol probability
    double rate;  // total rate, bit/transmission
};
OrOptimum or_optimal(unsigned M, unsigned T);

enum class SignatureScheme { Symmetric, Asymmetric };
// decoding-error upper bounds for random signature schemes (T may be huge in
// the asymptotic parametrizations, hence double)
double signature_error_bound(unsigned M, double T, unsigned L, SignatureScheme scheme);
double signature_rate(unsigned M, double T, unsigned L, SignatureScheme scheme);
SimReport signature_sim(unsigned M, unsigned T, unsigned L, SignatureScheme scheme,
                        std::uint64_t trials, std::uint64_t seed);

// Titlebaum construction: M-1 signatures from second-row multiples of the
// extended encoding matrix; messages modulate by adding a constant
struct Titlebaum {
    unsigned M;
    unsigned L;                       // shortened length (L <= M)
    std::vector<Vec> signatures;      // M-1 signatures, index = user-1
    Vec signature(unsigned user) const { return signatures.at(user - 1); }
    Vec modulated(unsigned user, unsigned message) const;  // message in 0..M-1
};
Titlebaum titlebaum(unsigned M, unsigned L = 0);
// max-agreement decoding of one user's message from the per-slot symbol sets
struct TitlebaumDecode {
    unsigned message;
    bool ambiguous;
};
TitlebaumDecode titlebaum_decode(const Titlebaum& code, unsigned user,
                                 const std::vector<std::set<Label>>& observed);
double titlebaum_pe_bound(unsigned M, unsigned T, unsigned L);
SimReport titlebaum_sim(unsigned M, unsigned T, unsigned L, std::uint64_t trials,
                        std::uint64_t seed);

// q-ary superimposed codes
struct SicCode {
    unsigned U = 0, n = 0, q = 0, T = 0;
    std::vector<Vec> words;
};
bool sic_check(const SicCode& code);  // throws TooLarge above the enumeration cap
// all RS codewords as a q-ary SIC with T < n/(k-1)
SicCode sic_rs_symbols(unsigned q, unsigned k, unsigned n = 0);
// Kautz-Singleton: RS symbols mapped to weight-1 binary words of length q
SicCode sic_from_rs(unsigned q, unsigned k, unsigned n = 0);
SicCode sic_compose(const SicCode& inner, const SicCode& outer);
// the n(q-1) single-position family
SicCode sic_single_position(unsigned n, unsigned q, unsigned T);

// XOR-channel signature access: signatures are rows of H^T of a (U,k) RS code
struct XorAccess {
    RsCode code;
    explicit XorAccess(const GaloisField& f, unsigned U, unsigned k) : code(f, U, k) {}
    Vec signature(unsigned user) const;  // row `user` of H^T
    Vec channel_output(const std::vector<std::pair<unsigned, Label>>& active) const;
    // decodes the active set; DecodeResult positions are user indices
    DecodeResult decode(const Vec& z) const;
};
// asymptotic achievable-rate evaluator c e^(-2c) log2((1+e^(-2c))/(1-e^(-2c)))
double xor_rate_asymptote(double c);

}  // namespace access
}  // namespace rsc

#endif
