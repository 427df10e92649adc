#ifndef RSCOD_SHA256_HPP
#define RSCOD_SHA256_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rsc {

// FIPS 180-4 SHA-256, self-contained. Used as the vault commitment digest.
class Sha256 {
public:
    Sha256() { reset(); }

    void reset();
    void update(const void* data, size_t len);
    std::array<std::uint8_t, 32> digest();

    static std::array<std::uint8_t, 32> of(const void* data, size_t len) {
        Sha256 h;
        h.update(data, len);
        return h.digest();
    }
    static std::string hex(const std::array<std::uint8_t, 32>& d);

private:
    void process_block(const std::uint8_t* p);
    std::uint32_t h_[8];
    std::uint8_t buf_[64];
    size_t buf_len_ = 0;
    std::uint64_t total_ = 0;
};

// digest of a vector of field labels, serialized little-endian 16-bit
std::string sha256_labels_hex(const std::vector<std::uint16_t>& labels);

}  // namespace rsc

#endif
