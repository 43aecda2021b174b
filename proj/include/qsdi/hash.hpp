#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace qsdi {

inline constexpr std::size_t sha256_bytes = 32;
using Digest = std::array<std::uint8_t, sha256_bytes>;

Digest sha256(std::span<const std::uint8_t> data);

/// Byte buffer assembled piecewise and hashed in one shot.
class HashInput {
public:
    HashInput& byte(std::uint8_t b) {
        buf_.push_back(b);
        return *this;
    }
    HashInput& bytes(std::span<const std::uint8_t> b) {
        buf_.insert(buf_.end(), b.begin(), b.end());
        return *this;
    }
    HashInput& u32_be(std::uint32_t v) {
        buf_.push_back(static_cast<std::uint8_t>(v >> 24));
        buf_.push_back(static_cast<std::uint8_t>(v >> 16));
        buf_.push_back(static_cast<std::uint8_t>(v >> 8));
        buf_.push_back(static_cast<std::uint8_t>(v));
        return *this;
    }
    Digest digest() const { return sha256(buf_); }
    const std::vector<std::uint8_t>& data() const { return buf_; }

private:
    std::vector<std::uint8_t> buf_;
};

} // namespace qsdi
