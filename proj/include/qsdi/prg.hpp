#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qsdi/field.hpp"

namespace qsdi {

/// Deterministic byte stream expanded from a seed.
///
/// The stream is the concatenation of SHA-256(seed || big-endian-32(counter))
/// blocks for counter = 0, 1, 2, ...; reads consume it byte by byte, so two
/// reads of 3 bytes equal one read of 6. Single-owner mutable state: callers
/// that need independent randomness use distinct seeds.
class SeededStream {
public:
    explicit SeededStream(std::vector<std::uint8_t> seed);
    explicit SeededStream(std::span<const std::uint8_t> seed);

    std::uint8_t byte();
    std::vector<std::uint8_t> bytes(std::size_t count);

    /// Uniform integer in [0, bound) by masked rejection sampling.
    std::uint64_t uniform(std::uint64_t bound);
    /// Uniform element of F_q, zero included.
    std::uint8_t field_element(const Field& f) {
        return static_cast<std::uint8_t>(uniform(f.q()));
    }
    /// Uniform element of F_q \ {0}.
    std::uint8_t nonzero_field_element(const Field& f) {
        return static_cast<std::uint8_t>(1 + uniform(f.q() - 1));
    }

    const std::vector<std::uint8_t>& seed() const { return seed_; }

private:
    void refill();

    std::vector<std::uint8_t> seed_;
    std::uint32_t counter_ = 0;
    std::array<std::uint8_t, 32> block_{};
    std::size_t pos_ = 32; // start exhausted
};

} // namespace qsdi
