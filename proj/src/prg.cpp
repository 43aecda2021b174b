#include "qsdi/prg.hpp"

#include <bit>
#include <stdexcept>

#include "qsdi/hash.hpp"

namespace qsdi {

SeededStream::SeededStream(std::vector<std::uint8_t> seed) : seed_(std::move(seed)) {}

SeededStream::SeededStream(std::span<const std::uint8_t> seed)
    : seed_(seed.begin(), seed.end()) {}

void SeededStream::refill() {
    HashInput in;
    in.bytes(seed_).u32_be(counter_);
    block_ = in.digest();
    ++counter_;
    pos_ = 0;
}

std::uint8_t SeededStream::byte() {
    if (pos_ >= block_.size()) refill();
    return block_[pos_++];
}

std::vector<std::uint8_t> SeededStream::bytes(std::size_t count) {
    std::vector<std::uint8_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(byte());
    return out;
}

std::uint64_t SeededStream::uniform(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform bound must be positive");
    if (bound == 1) return 0;
    const unsigned bits = std::bit_width(bound - 1);
    const unsigned nbytes = (bits + 7) / 8;
    const std::uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
    for (;;) {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < nbytes; ++i) v = (v << 8) | byte();
        v &= mask;
        if (v < bound) return v;
    }
}

} // namespace qsdi
