#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qsdi/commit.hpp"
#include "qsdi/keys.hpp"

namespace qsdi {

/// Five-pass round over F_q: commitments, field-element challenge alpha,
/// masked response beta, bit challenge b, disclosure. The challenge space
/// has exactly 2q members and a prover without the secret can answer q+1
/// of them, so one round bounds cheating at (q+1)/2q.

struct SeedPair {
    std::vector<std::uint8_t> sigma_seed;
    std::vector<std::uint8_t> gamma_seed;

    bool operator==(const SeedPair&) const = default;
};

/// b = 0 reveals the transform seeds; b = 1 reveals the transformed secret.
using Disclosure = std::variant<SeedPair, Vec>;

struct RoundTranscript {
    Commitment c1, c2;
    std::uint8_t alpha = 0;
    Vec beta;
    std::uint8_t b = 0;
    Disclosure disclosure;
};

enum class RejectReason : std::uint8_t {
    None = 0,
    C1Mismatch,
    C2Mismatch,
    WeightMismatch,
    MalformedDisclosure,
};

struct CheckResult {
    bool accepted = false;
    RejectReason reason = RejectReason::None;
};

const char* to_string(RejectReason r);

class ProtocolStateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// One committed round held in memory: draws the masking vector and the
/// transform seeds once, then answers any challenge pair as a const query.
/// The interactive sessions, the signature scheme, and the analysis harnesses
/// are all built on this. Holds a pointer to the public key; the key must
/// outlive the round.
class ProverRound {
public:
    /// `secret` is the claimed weight-w preimage; honest provers pass the
    /// private key, analysis code may pass anything of the right length.
    ProverRound(const PublicKey& pk, const Vec& secret, SeededStream& rng);

    const Commitment& c1() const { return c1_; }
    const Commitment& c2() const { return c2_; }
    Vec beta(std::uint8_t alpha) const;
    Disclosure disclosure(std::uint8_t b) const;
    RoundTranscript transcript_for(std::uint8_t alpha, std::uint8_t b) const;

    const Transform& transform() const { return transform_; }
    const SeedPair& seeds() const { return seeds_; }
    const Vec& masking_vector() const { return u_; }
    const Vec& secret_image() const { return image_s_; }

private:
    const PublicKey* pk_;
    Vec u_;
    SeedPair seeds_;
    Transform transform_;
    Vec image_u_, image_s_;
    Commitment c1_, c2_;
};

/// Prover side of one interactive round; enforces strictly forward message
/// order. Fresh ephemeral state per round, never reused.
class ProverSession {
public:
    ProverSession(const PublicKey& pk, const PrivateKey& sk);

    std::pair<Commitment, Commitment> commit(SeededStream& rng);
    Vec beta(std::uint8_t alpha);
    Disclosure reveal(std::uint8_t b);
    void next_round();

private:
    enum class Phase { Fresh, Committed, AlphaAnswered, Done };
    const PublicKey* pk_;
    Vec secret_;
    std::optional<ProverRound> round_;
    Phase phase_ = Phase::Fresh;
};

/// Verifier side of one interactive round; issues uniform challenges (alpha
/// over all of F_q including zero, b a fair bit) and checks the disclosure.
class VerifierSession {
public:
    VerifierSession(PublicKey pk, std::vector<std::uint8_t> challenge_seed);

    void receive_commitments(Commitment c1, Commitment c2);
    std::uint8_t challenge_alpha();
    void receive_beta(Vec beta);
    std::uint8_t challenge_b();
    CheckResult receive_disclosure(Disclosure d);
    const RoundTranscript& transcript() const;
    void next_round();

private:
    enum class Phase { Fresh, HaveCommitments, AlphaIssued, HaveBeta, BIssued, Done };
    PublicKey pk_;
    SeededStream rng_;
    Phase phase_ = Phase::Fresh;
    Commitment c1_, c2_;
    std::uint8_t alpha_ = 0;
    std::optional<Vec> beta_;
    std::uint8_t b_ = 0;
    std::optional<RoundTranscript> transcript_;
};

/// Stateless transcript check:
///   b = 0: rebuild the transform from the seeds and test
///          c1 = h(transform, H inv(beta) - alpha*y);
///   b = 1: test wt(image_s) = w and c2 = h(beta - alpha*image_s, image_s).
CheckResult verifier_check(const PublicKey& pk, const RoundTranscript& t);

struct IdentificationOutcome {
    bool accepted = false;
    std::size_t rounds_run = 0;
    std::size_t failed_round = 0; // 0-indexed, valid when rejected
    RejectReason reason = RejectReason::None;
    std::vector<RoundTranscript> transcripts;
};

/// Sequential multi-round identification; accepts iff every round accepts.
IdentificationOutcome run_identification(const PublicKey& pk, const PrivateKey& sk,
                                         std::size_t rounds, std::span<const std::uint8_t> seed,
                                         bool keep_transcripts = false);

/// Optimal strategy without the private key: commit honestly to a random
/// weight-w vector that does not satisfy the syndrome equation. Answers all
/// q pairs with b = 1 plus the (alpha = 0, b = 0) pair: q+1 of 2q.
class CheatingProver {
public:
    CheatingProver(const PublicKey& pk, SeededStream& rng);

    const Commitment& c1() const { return round_.c1(); }
    const Commitment& c2() const { return round_.c2(); }
    RoundTranscript transcript_for(std::uint8_t alpha, std::uint8_t b) const {
        return round_.transcript_for(alpha, b);
    }
    const Vec& fake_secret() const { return fake_secret_; }

private:
    Vec fake_secret_;
    ProverRound round_;
};

double cheat_success_bound(std::uint64_t q); // (q+1) / 2q
double per_round_exponent(std::uint64_t q);  // -log2 of the bound

/// Smallest round count with bound^rounds <= 2^-target_exponent.
std::size_t min_rounds(std::uint64_t q, unsigned target_exponent);

struct SoundnessEstimate {
    std::size_t trials = 0;
    std::size_t successes = 0;
    double rate = 0.0;
    double bound = 0.0;
};

/// Empirical per-round success rate of the cheating prover against uniform
/// challenges. Small instances; trials of 1e5 resolve the bound to ~0.005.
SoundnessEstimate soundness_monte_carlo(const SchemeParams& p, std::size_t trials,
                                        std::span<const std::uint8_t> seed);

/// Accepting transcript produced without the private key, for the chosen
/// challenge bit: b = 1 uses a random weight-w vector, b = 0 a random
/// syndrome-equation solution of unconstrained weight. alpha is uniform.
RoundTranscript simulate_transcript(const PublicKey& pk, std::uint8_t target_b,
                                    SeededStream& rng);

/// Response algebra of two accepting b = 1 transcripts sharing commitments:
/// z = (beta1 - beta2) / (alpha1 - alpha2), the transformed secret. Its
/// preimage under the round's transform solves the syndrome equation with
/// weight exactly w.
Vec extract_secret_image(std::uint8_t alpha1, const Vec& beta1, std::uint8_t alpha2,
                         const Vec& beta2);

} // namespace qsdi
