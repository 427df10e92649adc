#ifndef RSCOD_RS_HPP
#define RSCOD_RS_HPP

#include <memory>
#include <vector>

#include "rscod/matrix.hpp"

namespace rsc {

enum class RsVariant { Standard, Shortened, Extended };

struct DecodeResult {
    enum class Status { Corrected, Failure };
    Status status = Status::Failure;
    Vec codeword;                         // corrected codeword (Corrected only)
    Vec info;                             // canonical-matrix preimage of codeword
    std::vector<size_t> error_positions;  // sorted
    Vec error_values;
    bool ok() const { return status == Status::Corrected; }
};

// polynomial helpers over a field: coefficient vectors, index = degree
int poly_deg(const Vec& p);
Vec poly_trim(Vec p);
Vec poly_add(const GaloisField& f, const Vec& a, const Vec& b);
Vec poly_mul(const GaloisField& f, const Vec& a, const Vec& b);
// returns {quotient, remainder}
std::pair<Vec, Vec> poly_divmod(const GaloisField& f, Vec num, const Vec& den);
Label poly_eval(const GaloisField& f, const Vec& p, Label x);
Vec poly_derivative(const GaloisField& f, const Vec& p);

// Reed-Solomon code from consecutive rows of the full Vandermonde matrix
// (row i, column j holds alpha^{(first_row+i) j}).  Variants: Standard
// (n = q-1), Shortened (n < q-1, realized by info shortening of the full
// code), Extended (n = q, evaluation point 0 prepended as leading column).
class RsCode {
public:
    RsCode(const GaloisField& f, unsigned n, unsigned k,
           RsVariant variant = RsVariant::Standard, unsigned first_row = 0);

    const GaloisField& field() const { return f_; }
    unsigned n() const { return n_; }
    unsigned k() const { return k_; }
    unsigned d_min() const { return n_ - k_ + 1; }
    unsigned t_max() const { return (n_ - k_) / 2; }
    RsVariant variant() const { return variant_; }
    unsigned first_row() const { return first_row_; }

    const Mat& G() const { return G_; }
    const Mat& G_sys() const { return Gsys_; }
    const Mat& H_T() const { return HT_; }   // n x (n-k), G * H_T = 0
    Vec g_poly() const;                      // generator polynomial (Standard, first_row 0)

    // Default encoder: generator-polynomial encoding C(X) = A(X) g(X) for the
    // standard window, x*G otherwise.
    Vec encode(const Vec& info) const;
    Vec encode_matrix(const Vec& info) const;
    Vec encode_systematic(const Vec& info) const;       // info in first k symbols
    Vec encode_systematic_poly(const Vec& info) const;  // info in top-degree symbols

    Vec syndrome(const Vec& received) const;  // == received * H_T
    bool is_codeword(const Vec& word) const;

    DecodeResult decode_errors(const Vec& received) const;
    // error pattern from its syndrome alone (positions/values; no codeword)
    DecodeResult decode_syndrome(const Vec& syndrome) const;
    DecodeResult decode_erasures(const Vec& received, const std::vector<size_t>& erasures) const;
    DecodeResult decode_errors_and_erasures(const Vec& received,
                                            const std::vector<size_t>& erasures) const;

    // Semi-systematic form [I_u T U; 0 I_v W] built with row operations on G.
    Mat semi_systematic(unsigned u) const;

    // exact minimum weight; requires q^k <= 2^20
    unsigned min_distance_bruteforce() const;

    Vec info_from_codeword(const Vec& codeword) const;

private:
    void build_standard();
    void build_extended();
    DecodeResult finish_from_errors(const Vec& received, const std::vector<size_t>& pos,
                                    const Vec& vals) const;
    DecodeResult finish_from_codeword(const Vec& received, const Vec& corrected) const;

    GaloisField f_;
    unsigned n_, k_;
    RsVariant variant_;
    unsigned first_row_;
    Mat G_, Gsys_, HT_;
    std::vector<unsigned> syndrome_exps_;   // evaluation exponents, standard only
    std::unique_ptr<RsCode> full_;          // backing full-length code (Shortened)
    unsigned drop_ = 0;                     // shortened prefix length
};

unsigned min_distance_bruteforce(const GaloisField& f, const Mat& G);

}  // namespace rsc

#endif
