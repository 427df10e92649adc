#ifndef RSCOD_PACKET_HPP
#define RSCOD_PACKET_HPP

#include <vector>

#include "rscod/rs.hpp"

namespace rsc {
namespace packet {

// k data packets, each a length-N word of field symbols (rows of P_{k,N})
struct PacketBlock {
    std::vector<Vec> packets;
    std::vector<unsigned> ids;  // packet identifiers 0..k-1 unless overridden
};

enum class RowStatus { Received, Lost, Unknown };

// n transmitted rows of length N; a clean array has column-code codewords
// in every column
struct CodeArray {
    std::vector<Vec> rows;
    std::vector<RowStatus> row_status;
};

// word i of the result is sum_j g_{j,i} P_j
std::vector<Vec> combine(const GaloisField& f, const std::vector<Vec>& packets, const Mat& G);

// reconstruct the k original packets from >= k received words with known ids
PacketBlock recover(const GaloisField& f, const std::vector<Vec>& received,
                    const std::vector<unsigned>& ids, const Mat& G);

// Feedback-free array decoder: forms the syndrome array S = H R, row-reduces
// it while applying the same operations to H, and reads error-free rows off a
// zero-syndrome row of the transformed H.
PacketBlock mk_decode(const CodeArray& received, const RsCode& column_code);

}  // namespace packet
}  // namespace rsc

#endif
