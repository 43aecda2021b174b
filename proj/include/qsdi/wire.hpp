#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qsdi/keys.hpp"
#include "qsdi/protocol.hpp"
#include "qsdi/signature.hpp"

namespace qsdi {

/// File layout, all multi-byte integers big-endian:
///   magic "QSDI" | version 0x01 | payload type | matrix kind |
///   q, n, k, w, rounds, l_h, l_sigma, l_gamma (u16 each) | payload.
/// Elements travel one byte each; permutations as 0-indexed image bytes.
/// Decoding is strict: every malformation maps to its own error code and
/// nothing is silently repaired.

enum class WireError : std::uint8_t {
    BadMagic,
    BadVersion,
    BadPayloadType,
    BadMatrixKind,
    BadParams,
    UnexpectedEnd,
    TrailingBytes,
    ElementOutOfRange,
    PermutationNotBijective,
    ZeroGammaEntry,
    BadChallengeBit,
    BadDisclosureVariant,
};

const char* to_string(WireError e);

class WireException : public std::runtime_error {
public:
    WireException(WireError code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    WireError code() const { return code_; }

private:
    WireError code_;
};

enum class PayloadType : std::uint8_t {
    PublicKey = 0x01,
    PrivateKey = 0x02,
    Transcript = 0x03,
    Signature = 0x04,
};

inline constexpr std::size_t header_bytes = 4 + 1 + 1 + 1 + 8 * 2;

std::vector<std::uint8_t> encode_public_key(const PublicKey& pk);
PublicKey decode_public_key(std::span<const std::uint8_t> bytes);

/// Private-key files carry the full parameter header so they stand alone.
std::vector<std::uint8_t> encode_private_key(const SchemeParams& p, const PrivateKey& sk);
std::pair<SchemeParams, PrivateKey> decode_private_key(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_transcripts(const SchemeParams& p,
                                             const std::vector<RoundTranscript>& rounds);
std::pair<SchemeParams, std::vector<RoundTranscript>>
decode_transcripts(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_signature(const Signature& sig);
Signature decode_signature(std::span<const std::uint8_t> bytes);

/// Headerless primitive (length and field from context): permutation image
/// bytes then scaling bytes. The same bytes feed the round commitments.
std::vector<std::uint8_t> encode_transform(const Transform& t);
Transform decode_transform(std::span<const std::uint8_t> bytes, const Field& f, std::size_t n);

} // namespace qsdi
