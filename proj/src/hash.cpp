#include "qsdi/hash.hpp"

#include <openssl/sha.h>

namespace qsdi {

Digest sha256(std::span<const std::uint8_t> data) {
    Digest out{};
    ::SHA256(data.data(), data.size(), out.data());
    return out;
}

} // namespace qsdi
