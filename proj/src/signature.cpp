#include "qsdi/signature.hpp"

#include <stdexcept>

#include "qsdi/hash.hpp"
#include "qsdi/wire.hpp"

namespace qsdi {

namespace {

Digest alpha_challenge_seed(const PublicKey& pk, std::span<const std::uint8_t> message,
                            const std::vector<const Commitment*>& c1s,
                            const std::vector<const Commitment*>& c2s) {
    const std::vector<std::uint8_t> pk_bytes = encode_public_key(pk);
    HashInput in;
    in.byte(0x10);
    in.bytes(sha256(pk_bytes));
    in.bytes(message);
    for (std::size_t i = 0; i < c1s.size(); ++i) {
        in.bytes(*c1s[i]);
        in.bytes(*c2s[i]);
    }
    return in.digest();
}

Digest bit_challenge_hash(const Digest& alpha_seed, const std::vector<const Vec*>& betas) {
    HashInput in;
    in.byte(0x11);
    in.bytes(alpha_seed);
    for (const Vec* b : betas) in.bytes(b->bytes());
    return in.digest();
}

std::uint8_t bit_of(const Digest& d, std::size_t i) {
    return (d[i / 8] >> (7 - (i % 8))) & 1u;
}

} // namespace

std::size_t default_signature_rounds(const SchemeParams& p) {
    return min_rounds(p.q(), p.kappa == 0 ? 80 : p.kappa);
}

Signature sign(const PublicKey& pk, const PrivateKey& sk, std::span<const std::uint8_t> message,
               std::span<const std::uint8_t> seed, std::size_t rounds) {
    if (rounds == 0) throw std::invalid_argument("need at least one round");
    if (rounds > max_signature_rounds)
        throw std::invalid_argument("round count exceeds the bit-challenge hash width");

    SeededStream rng(seed);
    std::vector<ProverRound> committed;
    committed.reserve(rounds);
    for (std::size_t i = 0; i < rounds; ++i) committed.emplace_back(pk, sk.s, rng);

    std::vector<const Commitment*> c1s, c2s;
    for (const auto& r : committed) {
        c1s.push_back(&r.c1());
        c2s.push_back(&r.c2());
    }
    const Digest alpha_seed = alpha_challenge_seed(pk, message, c1s, c2s);

    SeededStream alpha_stream(std::vector<std::uint8_t>(alpha_seed.begin(), alpha_seed.end()));
    std::vector<std::uint8_t> alphas(rounds);
    for (std::size_t i = 0; i < rounds; ++i) alphas[i] = alpha_stream.field_element(pk.params.field);

    std::vector<Vec> betas;
    betas.reserve(rounds);
    for (std::size_t i = 0; i < rounds; ++i) betas.push_back(committed[i].beta(alphas[i]));

    std::vector<const Vec*> beta_ptrs;
    for (const Vec& b : betas) beta_ptrs.push_back(&b);
    const Digest bits = bit_challenge_hash(alpha_seed, beta_ptrs);

    Signature sig{pk.params, {}};
    sig.rounds.reserve(rounds);
    for (std::size_t i = 0; i < rounds; ++i) {
        sig.rounds.push_back(SignatureRound{committed[i].c1(), committed[i].c2(),
                                            std::move(betas[i]),
                                            committed[i].disclosure(bit_of(bits, i))});
    }
    return sig;
}

SignatureCheck verify_signature(const PublicKey& pk, std::span<const std::uint8_t> message,
                                const Signature& sig) {
    if (!sig.params.same_scheme(pk.params)) return {false, "signature/key parameter mismatch"};
    const std::size_t rounds = sig.rounds.size();
    if (rounds == 0) return {false, "empty signature"};
    if (rounds > max_signature_rounds) return {false, "too many rounds"};

    std::vector<const Commitment*> c1s, c2s;
    for (const auto& r : sig.rounds) {
        c1s.push_back(&r.c1);
        c2s.push_back(&r.c2);
    }
    const Digest alpha_seed = alpha_challenge_seed(pk, message, c1s, c2s);
    SeededStream alpha_stream(std::vector<std::uint8_t>(alpha_seed.begin(), alpha_seed.end()));
    std::vector<std::uint8_t> alphas(rounds);
    for (std::size_t i = 0; i < rounds; ++i) alphas[i] = alpha_stream.field_element(pk.params.field);

    std::vector<const Vec*> beta_ptrs;
    for (const auto& r : sig.rounds) beta_ptrs.push_back(&r.beta);
    const Digest bits = bit_challenge_hash(alpha_seed, beta_ptrs);

    for (std::size_t i = 0; i < rounds; ++i) {
        const std::uint8_t b = bit_of(bits, i);
        const bool is_seed_variant = std::holds_alternative<SeedPair>(sig.rounds[i].disclosure);
        if ((b == 0) != is_seed_variant)
            return {false, "round " + std::to_string(i) + ": disclosure variant does not match the derived challenge"};
        RoundTranscript t{sig.rounds[i].c1, sig.rounds[i].c2, alphas[i], sig.rounds[i].beta, b,
                          sig.rounds[i].disclosure};
        const CheckResult res = verifier_check(pk, t);
        if (!res.accepted)
            return {false, "round " + std::to_string(i) + ": " + to_string(res.reason)};
    }
    return {true, ""};
}

} // namespace qsdi
