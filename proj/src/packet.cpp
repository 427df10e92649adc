#include "rscod/packet.hpp"

#include <algorithm>

namespace rsc {
namespace packet {

std::vector<Vec> combine(const GaloisField& f, const std::vector<Vec>& packets, const Mat& G) {
    if (packets.size() != G.rows) throw BadParameters("packet count must match G rows");
    size_t N = packets.empty() ? 0 : packets[0].size();
    for (const auto& p : packets)
        if (p.size() != N) throw BadParameters("packets must have equal length");
    std::vector<Vec> out(G.cols, Vec(N, 0));
    for (size_t i = 0; i < G.cols; ++i)
        for (size_t j = 0; j < G.rows; ++j) {
            Label g = G(j, i);
            if (g == 0) continue;
            for (size_t s = 0; s < N; ++s) out[i][s] = f.add(out[i][s], f.mul(g, packets[j][s]));
        }
    return out;
}

PacketBlock recover(const GaloisField& f, const std::vector<Vec>& received,
                    const std::vector<unsigned>& ids, const Mat& G) {
    size_t k = G.rows;
    if (received.size() != ids.size()) throw BadParameters("one id per received word");
    if (received.size() < k) throw InsufficientRank("fewer than k words received");
    // greedily pick words whose id columns stay linearly independent
    std::vector<size_t> take;
    for (size_t i = 0; i < received.size() && take.size() < k; ++i) {
        std::vector<size_t> cols;
        for (size_t t : take) cols.push_back(ids[t]);
        cols.push_back(ids[i]);
        if (mat_rank(f, G.columns(cols)) == cols.size()) take.push_back(i);
    }
    if (take.size() < k) throw InsufficientRank("no rank-k id submatrix");
    std::vector<size_t> cols;
    for (size_t t : take) cols.push_back(ids[t]);
    auto inv = mat_inverse(f, G.columns(cols));
    if (!inv) throw InsufficientRank("selected submatrix singular");
    size_t N = received[0].size();
    PacketBlock out;
    out.packets.assign(k, Vec(N, 0));
    out.ids.resize(k);
    for (size_t j = 0; j < k; ++j) out.ids[j] = (unsigned)j;
    for (size_t s = 0; s < N; ++s) {
        Vec q(k);
        for (size_t j = 0; j < k; ++j) q[j] = received[take[j]][s];
        Vec p = vec_mat(f, q, *inv);
        for (size_t j = 0; j < k; ++j) out.packets[j][s] = p[j];
    }
    return out;
}

PacketBlock mk_decode(const CodeArray& received, const RsCode& code) {
    const GaloisField& f = code.field();
    size_t n = code.n(), k = code.k();
    if (received.rows.size() != n) throw BadParameters("array must have n rows");
    size_t N = received.rows[0].size();
    for (const auto& r : received.rows)
        if (r.size() != N) throw BadParameters("rows must have equal length");

    // syndrome array S = H R, with H the (n-k) x n parity check
    Mat H = code.H_T().transposed();
    Mat R(n, N);
    for (size_t i = 0; i < n; ++i) R.set_row(i, received.rows[i]);
    Mat S = mat_mul(f, H, R);

    // Gaussian elimination on S, carrying the identical row operations on H
    Mat H0 = H;
    rref(f, S, &H0);
    size_t rank = 0;
    for (size_t r = 0; r < S.rows; ++r)
        for (size_t c = 0; c < S.cols; ++c)
            if (S(r, c) != 0) {
                rank = r + 1;
                break;
            }
    if (rank >= n - k) throw TooManyCorruptRows("syndrome array has full rank");

    // a zero-syndrome row of H0 marks error-free array rows at its nonzero
    // coordinates (the code generated by H has minimum weight k+1)
    for (size_t zr = rank; zr < n - k; ++zr) {
        std::vector<size_t> clean;
        for (size_t i = 0; i < n; ++i)
            if (H0(zr, i) != 0) clean.push_back(i);
        if (clean.size() < k + 1) continue;
        std::vector<size_t> cols(clean.begin(), clean.begin() + k);
        auto inv = mat_inverse(f, code.G().columns(cols));
        if (!inv) continue;
        PacketBlock out;
        out.packets.assign(k, Vec(N, 0));
        out.ids.resize(k);
        for (size_t j = 0; j < k; ++j) out.ids[j] = (unsigned)j;
        bool consistent = true;
        for (size_t s = 0; s < N && consistent; ++s) {
            Vec b(k);
            for (size_t j = 0; j < k; ++j) b[j] = received.rows[cols[j]][s];
            Vec x = vec_mat(f, b, *inv);
            Vec cw = code.encode_matrix(x);
            for (size_t c : clean)
                if (cw[c] != received.rows[c][s]) {
                    consistent = false;
                    break;
                }
            for (size_t j = 0; j < k; ++j) out.packets[j][s] = x[j];
        }
        if (consistent) return out;
    }
    throw DependentErrors("no zero-syndrome row yields a consistent reconstruction");
}

}  // namespace packet
}  // namespace rsc
