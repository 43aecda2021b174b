#include "qsdi/commit.hpp"

#include <stdexcept>

#include "qsdi/hash.hpp"

namespace qsdi {

namespace {

void require_valid_length(unsigned commit_bits) {
    if (commit_bits == 0 || commit_bits % 8 != 0 || commit_bits > 256)
        throw std::invalid_argument("commitment length must be a multiple of 8 in (0, 256]");
}

Commitment truncate(const Digest& d, unsigned commit_bits) {
    return Commitment(d.begin(), d.begin() + commit_bits / 8);
}

} // namespace

Commitment commit_c1(const Transform& t, const Vec& syndrome_of_u, unsigned commit_bits) {
    require_valid_length(commit_bits);
    HashInput in;
    in.byte(0x01);
    for (std::uint32_t p : t.perm) in.byte(static_cast<std::uint8_t>(p));
    in.bytes(t.gamma.bytes());
    in.bytes(syndrome_of_u.bytes());
    return truncate(in.digest(), commit_bits);
}

Commitment commit_c2(const Vec& image_u, const Vec& image_s, unsigned commit_bits) {
    require_valid_length(commit_bits);
    if (image_u.size() != image_s.size())
        throw std::invalid_argument("commitment input length mismatch");
    HashInput in;
    in.byte(0x02);
    in.bytes(image_u.bytes());
    in.bytes(image_s.bytes());
    return truncate(in.digest(), commit_bits);
}

} // namespace qsdi
