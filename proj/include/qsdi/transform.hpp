#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qsdi/linalg.hpp"
#include "qsdi/prg.hpp"

namespace qsdi {

/// Monomial transformation: a permutation combined with nonzero coordinate
/// scaling. Preserves Hamming weight and commutes with scalar multiplication.
struct Transform {
    std::vector<std::uint32_t> perm; // 0-indexed images
    Vec gamma;                       // length n, every entry nonzero

    std::size_t size() const { return perm.size(); }
};

/// v -> (gamma[perm[0]] * v[perm[0]], ..., gamma[perm[n-1]] * v[perm[n-1]]).
Vec apply_transform(const Transform& t, const Vec& v);

/// Inverse map: result[perm[i]] = gamma[perm[i]]^-1 * w[i].
Vec invert_transform(const Transform& t, const Vec& w);

/// Permutation by seeded Fisher-Yates with rejection-sampled indices, scaling
/// vector by rejection over the nonzero elements. Deterministic in the seeds.
Transform derive_transform(std::span<const std::uint8_t> sigma_seed,
                           std::span<const std::uint8_t> gamma_seed, std::size_t n,
                           const Field& f);

bool is_valid_transform(const Transform& t);

} // namespace qsdi
