#pragma once

#include <span>
#include <string>
#include <vector>

#include "qsdi/protocol.hpp"

namespace qsdi {

/// Non-interactive variant: challenges derived by hashing. Alpha challenges
/// come from a stream seeded on the public key digest, the message, and every
/// round's commitments (domain byte 0x10); bit challenges are the bits of a
/// second hash over that seed and every beta (domain byte 0x11), which caps
/// the round count at 256.
struct SignatureRound {
    Commitment c1, c2;
    Vec beta;
    Disclosure disclosure;
};

struct Signature {
    SchemeParams params;
    std::vector<SignatureRound> rounds;
};

inline constexpr std::size_t max_signature_rounds = 256;

Signature sign(const PublicKey& pk, const PrivateKey& sk, std::span<const std::uint8_t> message,
               std::span<const std::uint8_t> seed, std::size_t rounds);

/// Round count used when none is requested: enough rounds to push the
/// cheating probability below 2^-kappa.
std::size_t default_signature_rounds(const SchemeParams& p);

struct SignatureCheck {
    bool accepted = false;
    std::string reason; // empty on accept
};

/// Recomputes both challenge hashes from the signature's commitments and
/// responses, then checks every round.
SignatureCheck verify_signature(const PublicKey& pk, std::span<const std::uint8_t> message,
                                const Signature& sig);

} // namespace qsdi
