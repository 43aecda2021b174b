#include <doctest.h>

#include "qsdi/signature.hpp"
#include "qsdi/wire.hpp"
#include "test_util.hpp"

using namespace qsdi;
using qsdi_test::seed_bytes;
using qsdi_test::toy_params;

namespace {

std::vector<std::uint8_t> text(const char* s) {
    return std::vector<std::uint8_t>(s, s + std::char_traits<char>::length(s));
}

} // namespace

TEST_SUITE("signature") {

TEST_CASE("sign and verify round-trip") {
    for (const auto& p : {param80(), toy_params(5, 12, 6, 3)}) {
        const KeyPair kp = keygen(p, seed_bytes(1));
        const auto msg = text("flat pack shipment 2291 accepted");
        const Signature sig = sign(kp.pk, kp.sk, msg, seed_bytes(2), 16);
        const auto res = verify_signature(kp.pk, msg, sig);
        CHECK(res.accepted);
        CHECK(res.reason.empty());
    }
}

TEST_CASE("signing is deterministic at the byte level") {
    const SchemeParams p = toy_params(5, 12, 6, 3);
    const KeyPair kp = keygen(p, seed_bytes(3));
    const auto msg = text("same message");
    const auto a = encode_signature(sign(kp.pk, kp.sk, msg, seed_bytes(4), 20));
    const auto b = encode_signature(sign(kp.pk, kp.sk, msg, seed_bytes(4), 20));
    const auto c = encode_signature(sign(kp.pk, kp.sk, msg, seed_bytes(5), 20));
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("any flipped message bit invalidates the signature") {
    const SchemeParams p = toy_params(5, 12, 6, 3);
    const KeyPair kp = keygen(p, seed_bytes(6));
    const auto msg = text("a short message to flip bits in");
    const Signature sig = sign(kp.pk, kp.sk, msg, seed_bytes(7), 16);
    SeededStream rng(seed_bytes(8));
    for (int i = 0; i < 100; ++i) {
        auto mutated = msg;
        const std::size_t bit = rng.uniform(8 * mutated.size());
        mutated[bit / 8] ^= std::uint8_t(1u << (bit % 8));
        CHECK(!verify_signature(kp.pk, mutated, sig).accepted);
    }
}

TEST_CASE("any flipped beta bit invalidates the signature") {
    const SchemeParams p = toy_params(5, 12, 6, 3);
    const KeyPair kp = keygen(p, seed_bytes(9));
    const auto msg = text("beta tamper check");
    const Signature sig = sign(kp.pk, kp.sk, msg, seed_bytes(10), 16);
    SeededStream rng(seed_bytes(11));
    for (int i = 0; i < 100; ++i) {
        Signature mutated = sig;
        const std::size_t round = rng.uniform(mutated.rounds.size());
        Vec beta = mutated.rounds[round].beta;
        const std::size_t pos = rng.uniform(beta.size());
        beta.set(pos, std::uint8_t((beta[pos] + 1 + rng.uniform(4)) % 5));
        if (beta == mutated.rounds[round].beta) continue;
        mutated.rounds[round].beta = beta;
        CHECK(!verify_signature(kp.pk, msg, mutated).accepted);
    }
}

TEST_CASE("round-count limits") {
    const SchemeParams p = toy_params(5, 12, 6, 3);
    const KeyPair kp = keygen(p, seed_bytes(12));
    const auto msg = text("limits");
    CHECK_THROWS_AS((void)sign(kp.pk, kp.sk, msg, seed_bytes(13), 0), std::invalid_argument);
    CHECK_THROWS_AS((void)sign(kp.pk, kp.sk, msg, seed_bytes(13), 257), std::invalid_argument);
    const Signature sig = sign(kp.pk, kp.sk, msg, seed_bytes(13), 256);
    CHECK(verify_signature(kp.pk, msg, sig).accepted);
}

TEST_CASE("default round count reaches the security exponent") {
    CHECK(default_signature_rounds(param80()) == min_rounds(256, 87));
    CHECK(default_signature_rounds(param128()) == min_rounds(256, 128));
    CHECK(default_signature_rounds(param80()) <= max_signature_rounds);
    CHECK(default_signature_rounds(param128()) <= max_signature_rounds);
}

TEST_CASE("signatures do not transfer to other keys or parameter sets") {
    const SchemeParams p = toy_params(5, 12, 6, 3);
    const KeyPair kp1 = keygen(p, seed_bytes(14));
    const KeyPair kp2 = keygen(p, seed_bytes(15));
    const auto msg = text("addressed to kp1");
    const Signature sig = sign(kp1.pk, kp1.sk, msg, seed_bytes(16), 16);
    CHECK(!verify_signature(kp2.pk, msg, sig).accepted);

    const KeyPair other = keygen(toy_params(7, 12, 6, 3), seed_bytes(17));
    const auto res = verify_signature(other.pk, msg, sig);
    CHECK(!res.accepted);
    CHECK(res.reason == "signature/key parameter mismatch");
}

} // TEST_SUITE
