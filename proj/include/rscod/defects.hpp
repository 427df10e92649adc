#ifndef RSCOD_DEFECTS_HPP
#define RSCOD_DEFECTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rscod/rs.hpp"

namespace rsc {
namespace defects {

// stuck-at cell states; Free cells take any value
enum class Cell : std::uint8_t { Free, Stuck0, Stuck1 };
using DefectVector = std::vector<Cell>;
// symbol-level variant: -1 free, otherwise the stuck label
using SymbolDefects = std::vector<int>;

unsigned defect_count(const DefectVector& d);
bool compatible(const std::vector<int>& word, const DefectVector& d);

// --- one defect in n positions: store (0, x) or (1, ~x) -------------------------
std::vector<int> one_defect_write(const std::vector<int>& info, const DefectVector& d);
std::vector<int> one_defect_read(const std::vector<int>& stored);

// --- n-1 defects in n positions: one bit on the word parity ---------------------
std::vector<int> parity_write(int bit, const DefectVector& d);
int parity_read(const std::vector<int>& stored);

// --- two defects via the pair-covering matrix ------------------------------------
struct TwoDefectCode {
    unsigned alpha = 3;
    unsigned rows = 6, cols = 10;
    unsigned prefix = 3;  // ceil(log2(2 alpha)) identification columns
    std::vector<std::vector<int>> C;
};
TwoDefectCode build_two_defect_matrix(unsigned alpha);
std::vector<int> two_defect_write(const TwoDefectCode& code, const std::vector<int>& info,
                                  const DefectVector& d);
std::vector<int> two_defect_read(const TwoDefectCode& code, const std::vector<int>& stored);

// --- Kuznetsov-Tsybakov existence bounds -----------------------------------------
struct KtBounds {
    double log_f_bound;  // natural log of the useless-matrix fraction bound
    double r_bound;      // achievable-rate bound
};
KtBounds kt_bound(unsigned n, unsigned k, unsigned t);

// --- linear defect matching --------------------------------------------------------
// top block [I_{n-k} | P^T] from the systematic generator of an (n, n-k)
// code; matches any (d_min - 1) defects of the associated (n,k) code
class LinearMatcher {
public:
    // top: (n-k') x n systematic matrix [I | *]; capability = max defects
    LinearMatcher(const GaloisField& f, const Mat& top, unsigned capability);
    unsigned n() const { return (unsigned)top_.cols; }
    unsigned info_bits() const { return (unsigned)(top_.cols - top_.rows); }
    unsigned capability() const { return capability_; }
    std::vector<int> write(const std::vector<int>& info, const DefectVector& d) const;
    std::vector<int> read(const std::vector<int>& stored) const;

private:
    GaloisField f_;
    Mat top_;
    unsigned capability_;
};

// --- combined defect matching and random error correction ---------------------------
// full G generates an error-correcting code; the first `mask_rows` rows carry
// the matching freedom, the rest the information
class CombinedMatcher {
public:
    CombinedMatcher(const GaloisField& f, const Mat& G, unsigned mask_rows, unsigned t_errors);
    unsigned info_bits() const { return (unsigned)G_.rows - mask_rows_; }
    unsigned capability() const;
    std::vector<int> write(const std::vector<int>& info, const DefectVector& d) const;
    std::vector<int> read(const std::vector<int>& stored) const;  // correct then strip

private:
    GaloisField f_;
    Mat G_;
    unsigned mask_rows_;
    unsigned t_errors_;
    std::vector<std::vector<int>> codewords_;  // for bounded-distance reading
};

// --- RS symbol defect matching -------------------------------------------------------
class RsSymbolMatcher {
public:
    // G_{n-delta, n}: first n-k rows solve the matching, k-delta info symbols
    RsSymbolMatcher(const GaloisField& f, unsigned n, unsigned k, unsigned delta);
    unsigned info_symbols() const { return k_ - delta_; }
    unsigned match_capability() const { return n_ - k_; }
    unsigned error_capability() const { return delta_ / 2; }
    double efficiency() const { return (double)k_ / n_; }  // delta = 0
    Vec write(const Vec& info, const SymbolDefects& d) const;
    struct Read {
        bool ok;
        Vec info;
    };
    Read read(const Vec& stored) const;

private:
    GaloisField f_;
    unsigned n_, k_, delta_;
    RsCode code_;  // (n, n-delta)
};

// --- write-once memory, two writes ----------------------------------------------------
// first write: a weight <= w1 pattern by combinadic indexing; second write:
// holes become Stuck1 defects for the supplied matcher
double wom_total_rate(double p);  // h(p) + (1 - p)
std::uint64_t wom_first_write_cardinality(unsigned n, unsigned max_weight);
std::vector<int> wom_first_write(unsigned n, unsigned max_weight, std::uint64_t message);
std::uint64_t wom_first_read(const std::vector<int>& holes, unsigned max_weight);
struct WomSession {
    std::vector<int> after_first;
    std::vector<int> after_second;
    double bits_first;
    double bits_second;
};
WomSession wom_two_write(unsigned n, unsigned max_weight, std::uint64_t m1,
                         const std::vector<int>& m2_bits, const LinearMatcher& matcher);

}  // namespace defects
}  // namespace rsc

#endif
