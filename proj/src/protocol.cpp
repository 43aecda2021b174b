#include "qsdi/protocol.hpp"

#include <cmath>

namespace qsdi {

const char* to_string(RejectReason r) {
    switch (r) {
        case RejectReason::None: return "none";
        case RejectReason::C1Mismatch: return "c1 mismatch";
        case RejectReason::C2Mismatch: return "c2 mismatch";
        case RejectReason::WeightMismatch: return "weight mismatch";
        case RejectReason::MalformedDisclosure: return "malformed disclosure";
    }
    return "unknown";
}

ProverRound::ProverRound(const PublicKey& pk, const Vec& secret, SeededStream& rng)
    : pk_(&pk),
      u_(pk.params.field, pk.params.n),
      seeds_{rng.bytes(pk.params.sigma_seed_bits / 8), rng.bytes(pk.params.gamma_seed_bits / 8)},
      transform_(derive_transform(seeds_.sigma_seed, seeds_.gamma_seed, pk.params.n,
                                  pk.params.field)),
      image_u_(pk.params.field, 0),
      image_s_(pk.params.field, 0) {
    if (secret.size() != pk.params.n || secret.field() != pk.params.field)
        throw std::invalid_argument("secret does not match the key parameters");
    const Field& f = pk.params.field;
    for (std::size_t i = 0; i < u_.size(); ++i) u_.set(i, rng.field_element(f));
    image_u_ = apply_transform(transform_, u_);
    image_s_ = apply_transform(transform_, secret);
    c1_ = commit_c1(transform_, pk.h.syndrome(u_), pk.params.commit_bits);
    c2_ = commit_c2(image_u_, image_s_, pk.params.commit_bits);
}

Vec ProverRound::beta(std::uint8_t alpha) const {
    // Equal to the transform of (u + alpha*s) by componentwise linearity.
    return add(image_u_, scale(alpha, image_s_));
}

Disclosure ProverRound::disclosure(std::uint8_t b) const {
    if (b == 0) return Disclosure(seeds_);
    if (b == 1) return Disclosure(image_s_);
    throw std::invalid_argument("challenge bit must be 0 or 1");
}

RoundTranscript ProverRound::transcript_for(std::uint8_t alpha, std::uint8_t b) const {
    return RoundTranscript{c1_, c2_, alpha, beta(alpha), b, disclosure(b)};
}

ProverSession::ProverSession(const PublicKey& pk, const PrivateKey& sk)
    : pk_(&pk), secret_(sk.s) {
    if (secret_.size() != pk.params.n) throw std::invalid_argument("secret length mismatch");
}

std::pair<Commitment, Commitment> ProverSession::commit(SeededStream& rng) {
    if (phase_ != Phase::Fresh) throw ProtocolStateError("commit out of phase");
    round_.emplace(*pk_, secret_, rng);
    phase_ = Phase::Committed;
    return {round_->c1(), round_->c2()};
}

Vec ProverSession::beta(std::uint8_t alpha) {
    if (phase_ != Phase::Committed) throw ProtocolStateError("beta out of phase");
    phase_ = Phase::AlphaAnswered;
    return round_->beta(alpha);
}

Disclosure ProverSession::reveal(std::uint8_t b) {
    if (phase_ != Phase::AlphaAnswered) throw ProtocolStateError("reveal out of phase");
    phase_ = Phase::Done;
    return round_->disclosure(b);
}

void ProverSession::next_round() {
    if (phase_ != Phase::Done) throw ProtocolStateError("round not finished");
    round_.reset();
    phase_ = Phase::Fresh;
}

VerifierSession::VerifierSession(PublicKey pk, std::vector<std::uint8_t> challenge_seed)
    : pk_(std::move(pk)), rng_(std::move(challenge_seed)) {}

void VerifierSession::receive_commitments(Commitment c1, Commitment c2) {
    if (phase_ != Phase::Fresh) throw ProtocolStateError("commitments out of phase");
    c1_ = std::move(c1);
    c2_ = std::move(c2);
    phase_ = Phase::HaveCommitments;
}

std::uint8_t VerifierSession::challenge_alpha() {
    if (phase_ != Phase::HaveCommitments) throw ProtocolStateError("alpha challenge out of phase");
    alpha_ = rng_.field_element(pk_.params.field);
    phase_ = Phase::AlphaIssued;
    return alpha_;
}

void VerifierSession::receive_beta(Vec beta) {
    if (phase_ != Phase::AlphaIssued) throw ProtocolStateError("beta out of phase");
    beta_.emplace(std::move(beta));
    phase_ = Phase::HaveBeta;
}

std::uint8_t VerifierSession::challenge_b() {
    if (phase_ != Phase::HaveBeta) throw ProtocolStateError("bit challenge out of phase");
    b_ = static_cast<std::uint8_t>(rng_.uniform(2));
    phase_ = Phase::BIssued;
    return b_;
}

CheckResult VerifierSession::receive_disclosure(Disclosure d) {
    if (phase_ != Phase::BIssued) throw ProtocolStateError("disclosure out of phase");
    transcript_.emplace(RoundTranscript{c1_, c2_, alpha_, *beta_, b_, std::move(d)});
    phase_ = Phase::Done;
    return verifier_check(pk_, *transcript_);
}

const RoundTranscript& VerifierSession::transcript() const {
    if (phase_ != Phase::Done) throw ProtocolStateError("round not finished");
    return *transcript_;
}

void VerifierSession::next_round() {
    if (phase_ != Phase::Done) throw ProtocolStateError("round not finished");
    transcript_.reset();
    beta_.reset();
    phase_ = Phase::Fresh;
}

CheckResult verifier_check(const PublicKey& pk, const RoundTranscript& t) {
    const Field& f = pk.params.field;
    if (t.beta.size() != pk.params.n || t.beta.field() != f)
        return {false, RejectReason::MalformedDisclosure};
    if (!f.contains(t.alpha)) return {false, RejectReason::MalformedDisclosure};

    if (t.b == 0) {
        const auto* seeds = std::get_if<SeedPair>(&t.disclosure);
        if (seeds == nullptr) return {false, RejectReason::MalformedDisclosure};
        Transform tr = derive_transform(seeds->sigma_seed, seeds->gamma_seed, pk.params.n, f);
        // H inv(beta)^T - alpha*y equals the committed syndrome of u for an
        // honest round.
        Vec shifted = sub(pk.h.syndrome(invert_transform(tr, t.beta)), scale(t.alpha, pk.y));
        if (commit_c1(tr, shifted, pk.params.commit_bits) != t.c1)
            return {false, RejectReason::C1Mismatch};
        return {true, RejectReason::None};
    }
    if (t.b == 1) {
        const auto* image_s = std::get_if<Vec>(&t.disclosure);
        if (image_s == nullptr || image_s->size() != pk.params.n || image_s->field() != f)
            return {false, RejectReason::MalformedDisclosure};
        if (weight(*image_s) != pk.params.secret_weight)
            return {false, RejectReason::WeightMismatch};
        Vec image_u = sub(t.beta, scale(t.alpha, *image_s));
        if (commit_c2(image_u, *image_s, pk.params.commit_bits) != t.c2)
            return {false, RejectReason::C2Mismatch};
        return {true, RejectReason::None};
    }
    return {false, RejectReason::MalformedDisclosure};
}

IdentificationOutcome run_identification(const PublicKey& pk, const PrivateKey& sk,
                                         std::size_t rounds, std::span<const std::uint8_t> seed,
                                         bool keep_transcripts) {
    if (rounds == 0) throw std::invalid_argument("need at least one round");
    SeededStream master(seed);
    SeededStream prover_rng(master.bytes(32));
    VerifierSession verifier(pk, master.bytes(32));
    ProverSession prover(pk, sk);

    IdentificationOutcome out;
    for (std::size_t i = 0; i < rounds; ++i) {
        auto [c1, c2] = prover.commit(prover_rng);
        verifier.receive_commitments(std::move(c1), std::move(c2));
        const std::uint8_t alpha = verifier.challenge_alpha();
        verifier.receive_beta(prover.beta(alpha));
        const std::uint8_t b = verifier.challenge_b();
        const CheckResult res = verifier.receive_disclosure(prover.reveal(b));
        ++out.rounds_run;
        if (keep_transcripts) out.transcripts.push_back(verifier.transcript());
        if (!res.accepted) {
            out.accepted = false;
            out.failed_round = i;
            out.reason = res.reason;
            return out;
        }
        if (i + 1 < rounds) {
            prover.next_round();
            verifier.next_round();
        }
    }
    out.accepted = true;
    return out;
}

namespace {

Vec draw_fake_secret(const PublicKey& pk, SeededStream& rng) {
    // Redraw on the (vanishing, but possible at toy sizes) event that the
    // sampled vector actually solves the syndrome equation; the strategy
    // models a prover who knows no solution.
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Vec s = sample_fixed_weight(pk.params.field, pk.params.n, pk.params.secret_weight, rng);
        if (pk.h.syndrome(s) != pk.y) return s;
    }
    throw std::runtime_error("could not draw a non-solution of the stated weight");
}

} // namespace

CheatingProver::CheatingProver(const PublicKey& pk, SeededStream& rng)
    : fake_secret_(draw_fake_secret(pk, rng)), round_(pk, fake_secret_, rng) {}

double cheat_success_bound(std::uint64_t q) {
    return double(q + 1) / double(2 * q);
}

double per_round_exponent(std::uint64_t q) {
    return -std::log2(cheat_success_bound(q));
}

std::size_t min_rounds(std::uint64_t q, unsigned target_exponent) {
    const double per = per_round_exponent(q);
    auto reaches = [&](std::size_t d) { return double(d) * per >= double(target_exponent); };
    std::size_t d = static_cast<std::size_t>(std::ceil(double(target_exponent) / per));
    while (d > 1 && reaches(d - 1)) --d;
    while (!reaches(d)) ++d;
    return d;
}

SoundnessEstimate soundness_monte_carlo(const SchemeParams& p, std::size_t trials,
                                        std::span<const std::uint8_t> seed) {
    SeededStream master(seed);
    KeyPair kp = keygen(p, master.bytes(32));
    SoundnessEstimate est;
    est.trials = trials;
    est.bound = cheat_success_bound(p.q());
    for (std::size_t t = 0; t < trials; ++t) {
        CheatingProver cheater(kp.pk, master);
        const std::uint8_t alpha = master.field_element(p.field);
        const std::uint8_t b = static_cast<std::uint8_t>(master.uniform(2));
        if (verifier_check(kp.pk, cheater.transcript_for(alpha, b)).accepted) ++est.successes;
    }
    est.rate = trials == 0 ? 0.0 : double(est.successes) / double(trials);
    return est;
}

RoundTranscript simulate_transcript(const PublicKey& pk, std::uint8_t target_b,
                                    SeededStream& rng) {
    if (target_b > 1) throw std::invalid_argument("challenge bit must be 0 or 1");
    const Vec pseudo_secret =
        target_b == 1
            ? sample_fixed_weight(pk.params.field, pk.params.n, pk.params.secret_weight, rng)
            : solve_syndrome(pk.h, pk.y, rng);
    ProverRound round(pk, pseudo_secret, rng);
    const std::uint8_t alpha = rng.field_element(pk.params.field);
    return round.transcript_for(alpha, target_b);
}

Vec extract_secret_image(std::uint8_t alpha1, const Vec& beta1, std::uint8_t alpha2,
                         const Vec& beta2) {
    const Field& f = beta1.field();
    if (alpha1 == alpha2) throw std::invalid_argument("challenges must be distinct");
    const std::uint8_t d = f.sub(alpha1, alpha2);
    return scale(f.inv(d), sub(beta1, beta2));
}

} // namespace qsdi
