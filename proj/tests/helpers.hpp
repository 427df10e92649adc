#ifndef RSCOD_TEST_HELPERS_HPP
#define RSCOD_TEST_HELPERS_HPP

#include <vector>

#include "rscod/rs.hpp"

namespace rsc::test {

inline std::vector<Vec> all_info_vectors(const GaloisField& f, unsigned k) {
    std::vector<Vec> out;
    Vec x(k, 0);
    while (true) {
        out.push_back(x);
        unsigned pos = 0;
        while (pos < k) {
            x[pos] = (Label)((x[pos] + 1) % f.q());
            if (x[pos] != 0) break;
            ++pos;
        }
        if (pos == k) break;
    }
    return out;
}

inline std::vector<Vec> all_codewords(const RsCode& code) {
    std::vector<Vec> out;
    for (const auto& x : all_info_vectors(code.field(), code.k()))
        out.push_back(code.encode_matrix(x));
    return out;
}

inline unsigned hamming(const Vec& a, const Vec& b) {
    unsigned d = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

// exhaustive nearest-codeword search; unique = exactly one word at best distance
struct Nearest {
    Vec codeword;
    unsigned distance;
    bool unique;
};

inline Nearest nearest_codeword(const std::vector<Vec>& codewords, const Vec& r) {
    Nearest best{codewords.front(), (unsigned)r.size() + 1, true};
    for (const auto& c : codewords) {
        unsigned d = hamming(c, r);
        if (d < best.distance) {
            best = {c, d, true};
        } else if (d == best.distance) {
            best.unique = false;
        }
    }
    return best;
}

// odometer over all index subsets of size t out of n
inline bool next_subset(std::vector<size_t>& idx, size_t n) {
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

inline std::vector<size_t> first_subset(size_t t) {
    std::vector<size_t> idx(t);
    for (size_t i = 0; i < t; ++i) idx[i] = i;
    return idx;
}

}  // namespace rsc::test

#endif
