#include "rscod/galois.hpp"

#include <sstream>

namespace rsc {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

GaloisField GaloisField::prime(unsigned p) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    GaloisField f;
    f.kind_ = Kind::Prime;
    f.q_ = p;
    f.m_ = 1;
    f.poly_ = 0;
    // smallest primitive root
    unsigned g = 0;
    for (unsigned cand = 1; cand < p; ++cand) {
        unsigned x = 1;
        unsigned order = 0;
        do {
            x = (unsigned)((std::uint64_t)x * cand % p);
            ++order;
        } while (x != 1);
        if (order == p - 1) {
            g = cand;
            break;
        }
    }
    f.log_.assign(p, 0);
    f.antilog_.assign(p - 1, 0);
    unsigned x = 1;
    for (unsigned i = 0; i < p - 1; ++i) {
        f.antilog_[i] = (Label)x;
        f.log_[x] = (Label)i;
        x = (unsigned)((std::uint64_t)x * g % p);
    }
    return f;
}

GaloisField GaloisField::binary(unsigned m, unsigned poly) {
    if (m < 1 || m > 16) throw BadParameters("extension degree m must be in 1..16");
    if ((poly >> m) != 1u)
        throw BadParameters("polynomial must have degree exactly m");
    GaloisField f;
    f.kind_ = Kind::Binary;
    f.m_ = m;
    f.q_ = 1u << m;
    f.poly_ = poly;
    f.log_.assign(f.q_, 0);
    f.antilog_.assign(f.q_ - 1, 0);
    // Powers of X modulo poly; X must have period exactly 2^m - 1.
    unsigned x = 1;
    for (unsigned i = 0; i < f.q_ - 1; ++i) {
        if (x == 1 && i > 0)
            throw NotMinimalPolynomial("period of X under the polynomial is " +
                                       std::to_string(i) + " < 2^m - 1");
        f.antilog_[i] = (Label)x;
        f.log_[x] = (Label)i;
        x <<= 1;
        if (x & f.q_) x ^= poly;
    }
    if (x != 1)
        throw NotMinimalPolynomial("X^(2^m-1) != 1 under the supplied polynomial");
    return f;
}

unsigned GaloisField::default_poly(unsigned m) {
    // m = 3 is fixed by Table A.2.1; the rest are standard primitive choices.
    switch (m) {
        case 1: return 0b11;               // 1+X
        case 2: return 0b111;              // 1+X+X^2
        case 3: return 0b1011;             // 1+X+X^3
        case 4: return 0b10011;            // 1+X+X^4
        case 5: return 0b100101;           // 1+X^2+X^5
        case 6: return 0b1000011;          // 1+X+X^6
        case 7: return 0b10001001;         // 1+X^3+X^7
        case 8: return 0b100011101;        // 1+X^2+X^3+X^4+X^8
        case 9: return 0b1000010001;       // 1+X^4+X^9
        case 10: return 0b10000001001;     // 1+X^3+X^10
        case 11: return 0b100000000101;    // 1+X^2+X^11
        case 12: return 0b1000001010011;   // 1+X+X^4+X^6+X^12
        default: throw BadParameters("no default polynomial shipped for m = " + std::to_string(m));
    }
}

GaloisField GaloisField::binary_default(unsigned m) { return binary(m, default_poly(m)); }

Label GaloisField::pow(Label a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw DivideByZero("0 to a negative power");
        return 0;
    }
    long long r = ((long long)log_[a] * (e % (long long)(q_ - 1))) % (long long)(q_ - 1);
    if (r < 0) r += q_ - 1;
    return antilog_[(size_t)r];
}

std::string GaloisField::label_to_poly_string(Label a) const {
    if (kind_ == Kind::Prime) return std::to_string(a);
    if (a == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < m_; ++i) {
        if (!(a >> i & 1)) continue;
        if (!first) os << "+";
        if (i == 0)
            os << "1";
        else if (i == 1)
            os << "X";
        else
            os << "X^" << i;
        first = false;
    }
    return os.str();
}

std::string GaloisField::label_to_tuple_string(Label a) const {
    std::string s;
    for (unsigned i = 0; i < m_; ++i) s += char('0' + (a >> i & 1));
    return s;
}

unsigned parse_poly_mask(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace((unsigned char)c)) t += c;
    if (t.empty()) throw BadParameters("empty polynomial");
    bool numeric_prefix = t.size() > 2 && t[0] == '0' &&
                          (t[1] == 'x' || t[1] == 'X' || t[1] == 'b' || t[1] == 'B');
    bool symbolic = false;
    if (!numeric_prefix)
        for (char c : t)
            if (c == 'x' || c == 'X' || c == '+' || c == '^') symbolic = true;
    if (!symbolic) {
        try {
            if (t.size() > 2 && t[0] == '0' && (t[1] == 'b' || t[1] == 'B'))
                return (unsigned)std::stoul(t.substr(2), nullptr, 2);
            return (unsigned)std::stoul(t, nullptr, 0);
        } catch (...) {
            throw BadParameters("cannot parse polynomial '" + text + "'");
        }
    }
    // normalize unicode superscripts to ^digit
    static const char* sup[10] = {"⁰", "¹", "²", "³", "⁴",
                                  "⁵", "⁶", "⁷", "⁸", "⁹"};
    for (int d = 0; d < 10; ++d) {
        std::string from = sup[d];
        std::string to = "^" + std::to_string(d);
        size_t pos;
        while ((pos = t.find(from)) != std::string::npos) t.replace(pos, from.size(), to);
    }
    unsigned mask = 0;
    size_t i = 0;
    while (i < t.size()) {
        if (t[i] == '+') {
            ++i;
            continue;
        }
        if (t[i] == '1') {
            mask |= 1;
            ++i;
        } else if (t[i] == 'X' || t[i] == 'x') {
            ++i;
            unsigned e = 1;
            if (i < t.size() && t[i] == '^') {
                ++i;
                size_t j = i;
                while (j < t.size() && isdigit((unsigned char)t[j])) ++j;
                if (j == i) throw BadParameters("bad exponent in '" + text + "'");
                e = (unsigned)std::stoul(t.substr(i, j - i));
                i = j;
            }
            mask |= 1u << e;
        } else {
            throw BadParameters("cannot parse polynomial '" + text + "'");
        }
    }
    return mask;
}

}  // namespace rsc
