#pragma once

#include <cstdint>
#include <vector>

#include "qsdi/linalg.hpp"
#include "qsdi/transform.hpp"

namespace qsdi {

/// Truncated SHA-256 digest, commit_bits/8 bytes.
using Commitment = std::vector<std::uint8_t>;

/// First commitment of a round: binds the transform and the syndrome of the
/// masking vector. SHA-256 over a domain byte 0x01 followed by the wire
/// encodings (permutation images, scaling vector, syndrome; one byte each),
/// truncated to commit_bits.
Commitment commit_c1(const Transform& t, const Vec& syndrome_of_u, unsigned commit_bits);

/// Second commitment: binds the transformed masking vector and transformed
/// secret, domain byte 0x02.
Commitment commit_c2(const Vec& image_u, const Vec& image_s, unsigned commit_bits);

} // namespace qsdi
