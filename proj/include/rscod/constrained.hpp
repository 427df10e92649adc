#ifndef RSCOD_CONSTRAINED_HPP
#define RSCOD_CONSTRAINED_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "rscod/rs.hpp"

namespace rsc {
namespace constrained {

// --- symbol avoidance ---------------------------------------------------------
struct AvoidanceConfig {
    const RsCode* code;      // systematic (n,k) code, k = kappa + r
    unsigned kappa;          // information symbols
    unsigned r;              // control symbols
    std::set<Label> avoid;   // forbidden symbol set A
    AvoidanceConfig(const RsCode& c, unsigned kappa_, unsigned r_, std::set<Label> a);
    bool feasible() const;   // n - (kappa + r) < (q - |A|)/|A|
};
struct AvoidResult {
    Vec codeword;
    Vec control;  // the chosen control word s^r
};
AvoidResult avoid_encode(const AvoidanceConfig& cfg, const Vec& info);
Vec avoid_decode(const AvoidanceConfig& cfg, const Vec& codeword);

// --- run-length-limited block codes --------------------------------------------
struct RllCode {
    unsigned d = 1;          // minimum run d+1
    unsigned length = 5;
    unsigned d_min = 1;
    // per-message codeword alternatives (1 or 2 entries each)
    std::vector<std::vector<std::vector<int>>> words;
};
// the worked 8-message, length-5, (d+1 = 2) one-symbol-look-ahead table
RllCode rll_table_7_1();
// generator: enumerate d-constrained words of the given length, keep a
// codebook with the requested pairwise distance (greedy selection)
RllCode rll_generate(unsigned length, unsigned d, unsigned d_min_target);

std::vector<int> rll_encode(const RllCode& code, const std::vector<unsigned>& messages);
std::vector<unsigned> rll_decode_hard(const RllCode& code, const std::vector<int>& stream);
std::vector<unsigned> rll_decode_soft(const RllCode& code, const std::vector<double>& soft);
// min-run scanner; interior runs must be >= d+1
unsigned min_run_length(const std::vector<int>& stream);
// rate bookkeeping (k/n) R_RLL (d+1)
double rll_rs_rate_product(double rs_rate, double rll_rate, unsigned d);

// --- optimum distance profile ---------------------------------------------------
enum class OdpDirection { Deletion, Extension };
enum class OdpMode { Greedy, Exhaustive };
// deletion profiles are reported as (d_k, d_{k-1}, ..., d_1), extension
// profiles as (delta_1, ..., delta_k)
std::vector<unsigned> odp(const GaloisField& f, const Mat& G, OdpDirection dir, OdpMode mode);

// --- same-weight construction -----------------------------------------------------
class SameWeightCode {
public:
    // built from the canonical rows 0..k of G_{k+1,n}
    SameWeightCode(const GaloisField& f, unsigned n, unsigned k);
    Vec encode(const Vec& info) const;  // x G_{0..k-1} + row_k
    struct Decode {
        bool ok;
        Vec info;
    };
    Decode decode(const Vec& received) const;
    Decode decode_with_erasures(const Vec& received, const std::vector<size_t>& erasures) const;
    unsigned max_same_symbol() const;   // largest multiplicity over all codewords
    const RsCode& base() const { return base_; }
    const Vec& offset_row() const { return offset_; }

private:
    GaloisField f_;
    RsCode base_;   // (n, k) from rows 0..k-1
    Vec offset_;    // row k
};

}  // namespace constrained
}  // namespace rsc

#endif
