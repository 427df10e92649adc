#ifndef RSCOD_GALOIS_HPP
#define RSCOD_GALOIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rscod/errors.hpp"

namespace rsc {

// Element label. Prime fields use residues 0..p-1. Binary extension fields
// use the coefficient bitmask label = sum p_i 2^i for the polynomial
// p_0 + p_1 X + ... + p_{m-1} X^{m-1}, so the LSB is the constant term.
using Label = std::uint16_t;

class GaloisField {
public:
    enum class Kind { Prime, Binary };

    static GaloisField prime(unsigned p);
    // poly is the bitmask of p_0..p_m for the minimal polynomial; must have
    // degree exactly m and X must be primitive (period 2^m - 1).
    static GaloisField binary(unsigned m, unsigned poly);
    static GaloisField binary_default(unsigned m);
    static unsigned default_poly(unsigned m);

    Kind kind() const { return kind_; }
    unsigned q() const { return q_; }
    unsigned characteristic() const { return kind_ == Kind::Prime ? q_ : 2; }
    unsigned m() const { return m_; }
    unsigned poly() const { return poly_; }

    Label add(Label a, Label b) const {
        return kind_ == Kind::Binary ? Label(a ^ b) : Label((a + b) % q_);
    }
    Label sub(Label a, Label b) const {
        return kind_ == Kind::Binary ? Label(a ^ b) : Label((a + q_ - b) % q_);
    }
    Label neg(Label a) const { return kind_ == Kind::Binary ? a : Label((q_ - a) % q_); }
    Label mul(Label a, Label b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    Label inv(Label a) const {
        if (a == 0) throw DivideByZero("inverse of zero");
        return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    Label div(Label a, Label b) const { return mul(a, inv(b)); }
    // a^e with e reduced mod q-1 for a != 0; 0^0 = 1 by convention.
    Label pow(Label a, long long e) const;

    Label alpha() const { return antilog_[1 % (q_ - 1)]; }
    Label alpha_pow(long long e) const {
        long long r = e % (long long)(q_ - 1);
        if (r < 0) r += q_ - 1;
        return antilog_[(size_t)r];
    }
    unsigned log(Label a) const {
        if (a == 0) throw DivideByZero("log of zero");
        return log_[a];
    }

    const std::vector<Label>& log_table() const { return log_; }
    const std::vector<Label>& antilog_table() const { return antilog_; }

    // "1+X+X^3" style rendering of a binary-field label; residue for primes.
    std::string label_to_poly_string(Label a) const;
    // m-tuple (p_0 p_1 ... p_{m-1}) left to right, e.g. alpha in GF(8) -> "010".
    std::string label_to_tuple_string(Label a) const;

    bool operator==(const GaloisField& o) const {
        return kind_ == o.kind_ && q_ == o.q_ && poly_ == o.poly_;
    }

private:
    GaloisField() = default;

    Kind kind_ = Kind::Binary;
    unsigned q_ = 0;       // field order
    unsigned m_ = 0;       // extension degree (binary kind)
    unsigned poly_ = 0;    // minimal polynomial bitmask (binary kind)
    std::vector<Label> log_;      // label -> exponent, log_[0] unused
    std::vector<Label> antilog_;  // exponent -> label, size q-1
};

bool is_prime(unsigned n);

// Parses "11", "0b1011", "0x0b" and "1+X+X^3" (also unicode superscripts).
unsigned parse_poly_mask(const std::string& text);

}  // namespace rsc

#endif
