#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsdi/params.hpp"
#include "qsdi/protocol.hpp"

namespace qsdi {

/// Analytic accounting, N = ceil(log2 q) bits per element:
///   public data      k*k*N + n*N (systematic matrix block plus syndrome)
///   communication    rounds * (2*l_h + N + n*N + 1 + (l_sigma + l_gamma + n*N)/2),
///                    the /2 term averaging the two disclosure branches;
///                    reported as the exact rational rounded up
///   field operations rounds * (k + n + 2w) multiplications,
///                    rounds * (k + w) additions
/// Double-circulant keys: (n/2)*N matrix bits, n*N secret bits; the stored
/// syndrome is accounted separately.

std::uint64_t public_data_bits(const SchemeParams& p);

struct CirculantKeyBits {
    std::uint64_t pk_bits = 0; // circulant first row only
    std::uint64_t sk_bits = 0;
    std::uint64_t pk_with_syndrome_bits = 0;
};
CirculantKeyBits circulant_key_bits(const SchemeParams& p);

std::uint64_t communication_bits(const SchemeParams& p, std::size_t rounds);
inline std::uint64_t communication_bits(const SchemeParams& p) {
    return communication_bits(p, p.rounds);
}

struct OperationCounts {
    std::uint64_t mults = 0;
    std::uint64_t adds = 0;
};
OperationCounts computation_counts(const SchemeParams& p, std::size_t rounds);
inline OperationCounts computation_counts(const SchemeParams& p) {
    return computation_counts(p, p.rounds);
}

/// Signature payload under the averaged-disclosure accounting:
/// rounds * (2*l_h + n*N + (l_sigma + l_gamma + n*N)/2), rounded up. Equals
/// the communication figure minus the challenge bits rounds * (N + 1).
std::uint64_t signature_average_bits(const SchemeParams& p, std::size_t rounds);

/// Bits of the serialized transcript payload (headers excluded, bytes * 8).
std::uint64_t measured_transcript_bits(const SchemeParams& p,
                                       const std::vector<RoundTranscript>& rounds);

/// The communication formula with each round's actual disclosure branch in
/// place of the average.
std::uint64_t formula_transcript_bits(const SchemeParams& p,
                                      const std::vector<RoundTranscript>& rounds);

struct CostReport {
    std::string name;
    MatrixKind kind = MatrixKind::RandomSystematic;
    std::uint64_t q = 0, n = 0, k = 0, secret_weight = 0;
    std::uint64_t element_bits = 0, rounds = 0;
    std::uint64_t commit_bits = 0, sigma_seed_bits = 0, gamma_seed_bits = 0;

    std::uint64_t public_data_bits = 0; // random-systematic kind
    std::uint64_t circulant_pk_bits = 0, circulant_sk_bits = 0,
                  circulant_pk_with_syndrome_bits = 0; // double-circulant kind
    std::uint64_t communication_bits = 0;
    std::uint64_t mult_count = 0, add_count = 0;
    double log2_mults = 0.0, log2_adds = 0.0;
    double per_round_exponent = 0.0;
    std::uint64_t min_rounds_16 = 0; // rounds needed for 2^-16 cheating odds

    bool has_published = false;
    std::uint64_t published_public_data_bits = 0;
    std::uint64_t published_communication_bits = 0;
    double published_log2_mults = 0.0, published_log2_adds = 0.0;

    bool operator==(const CostReport&) const = default;
};

CostReport cost_report(const SchemeParams& p);
CostReport cost_report(const SchemeParams& p, std::size_t rounds);

/// Canonical machine-readable form, one key=value per line. Derived lines
/// (deviation notes) are regenerated on encode, so decode(encode(r)) == r
/// and encode(decode(s)) == s on canonical strings.
std::string encode_cost_report(const CostReport& r);
CostReport decode_cost_report(std::string_view text);

/// Aligned human-readable table.
std::string format_cost_table(const CostReport& r);

} // namespace qsdi
