#ifndef RSCOD_MODEM_HPP
#define RSCOD_MODEM_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "rscod/report.hpp"
#include "rscod/rng.hpp"
#include "rscod/rs.hpp"

namespace rsc {
namespace modem {

using Bits = std::vector<int>;
using Soft = std::vector<double>;

// antipodal AWGN channel: bit b -> +-d/2 plus N(0, sigma2)
class AwgnChannel {
public:
    AwgnChannel(double amplitude, double sigma2, std::uint64_t seed)
        : amp_(amplitude), sigma2_(sigma2), rng_(seed) {
        if (sigma2 <= 0) throw BadParameters("sigma2 must be positive");
    }
    double amplitude() const { return amp_; }
    double sigma2() const { return sigma2_; }
    Soft transmit(const Bits& bits) {
        Soft out(bits.size());
        for (size_t i = 0; i < bits.size(); ++i)
            out[i] = (bits[i] ? amp_ : -amp_) + rng_.gaussian(0.0, sigma2_);
        return out;
    }
    double p_bsc() const;  // Q(sqrt(d^2/4sigma^2))

private:
    double amp_;  // d/2
    double sigma2_;
    Xoshiro256 rng_;
};

Bits hard_decision(const Soft& soft);
// even-parity soft decision: flip the least reliable bit when parity is odd
Bits spc_soft_decode(const Soft& soft);
double coding_gain_db(unsigned d_min, unsigned k, unsigned n);
double union_bound(unsigned k, unsigned d_min, double rate, double eb_n0);

// bits <-> field labels (LSB first, m bits per symbol)
Bits label_to_bits(Label v, unsigned m);
Label bits_to_label(const Bits& bits);

// RS symbols extended with one parity bit each; decode via per-symbol SPC
// soft decision followed by RS decoding
class RsSpcSymbolCodec {
public:
    explicit RsSpcSymbolCodec(const RsCode& code) : code_(code) {}
    double rate() const;
    Bits encode(const Vec& info) const;
    struct Result {
        bool ok;
        Vec info;
        Vec symbols;  // hard symbols after the SPC stage
    };
    Result decode(const Soft& soft) const;

private:
    const RsCode& code_;
};

// Block-wise scheme: N-1 RS words plus their bitwise XOR, columns protected
// by length-N SPC codes
class BlockRsSpcCodec {
public:
    BlockRsSpcCodec(const RsCode& code, unsigned N) : code_(code), N_(N) {
        if (N < 2) throw BadParameters("need at least two rows");
    }
    double rate() const;
    // rows of bits, one per transmitted word
    std::vector<Bits> encode(const std::vector<Vec>& info_words) const;
    struct Result {
        bool ok;                 // a full block reconstruction was produced
        bool stopped;            // iteration guard fired
        unsigned iterations;
        std::vector<Vec> info;   // N-1 decoded information words
    };
    Result decode(const std::vector<Soft>& soft_rows) const;
    // likelihood argmax over rows for adding the discrepancy word e,
    // evaluated only on the nonzero coordinates of e
    unsigned select_repair_row(const std::vector<Soft>& soft_rows,
                               const std::vector<Vec>& decoded, const Vec& e) const;

private:
    const RsCode& code_;
    unsigned N_;
};

// MFSK threshold detection: entry (f,t) set when the envelope passed T
struct DetectionMatrix {
    unsigned M = 0, n = 0;
    std::vector<std::vector<bool>> cell;  // [frequency][time]
    std::set<Label> column_set(unsigned t) const {
        std::set<Label> s;
        for (unsigned f = 0; f < M; ++f)
            if (cell[f][t]) s.insert((Label)f);
        return s;
    }
};

// ideal noiseless envelope matrix for a transmitted word (symbols 0..M-1)
std::vector<std::vector<double>> ideal_envelopes(const Vec& word, unsigned M, double es);
DetectionMatrix mfsk_detect(const std::vector<std::vector<double>>& energies, double es,
                            double threshold_offset = 0.0);

enum class Disturbance { BackgroundInsert, BackgroundDelete, Narrowband, Impulse, Fade };
// narrowband(f): row f all ones; impulse(t): column t all ones; fade(f): row f
// zeroed; background: single cell flipped
DetectionMatrix apply_disturbance(DetectionMatrix m, Disturbance kind, unsigned index,
                                  unsigned index2 = 0);

struct PermutationCode {
    unsigned M = 0;
    unsigned d_min = 0;
    std::vector<Vec> codewords;  // symbols 0..M-1, each word a permutation
};
enum class PermSource { RsDerived, Table };
PermutationCode perm_code(unsigned M, PermSource source, unsigned d_min = 0);
// |C| <= M!/(d-1)!
double perm_bound(unsigned M, unsigned d);
// maximum permutation-code size by exhaustive search with the bound cutoff
unsigned perm_search_max(unsigned M, unsigned d);
struct PermDecode {
    unsigned message;
    bool ambiguous;
};
PermDecode perm_decode(const PermutationCode& code, const DetectionMatrix& matrix);

// BER simulation over the AWGN channel
enum class BerScheme { Uncoded, Spc, RsHard, RsSpcA, RsSpcB };
SimReport ber_sim(BerScheme scheme, double eb_n0_db, std::uint64_t min_bits, std::uint64_t seed,
                  unsigned spc_n = 8, unsigned rs_m = 5, unsigned rs_k = 21, unsigned block_N = 9);

}  // namespace modem
}  // namespace rsc

#endif
