#include "qsdi/wire.hpp"

namespace qsdi {

const char* to_string(WireError e) {
    switch (e) {
        case WireError::BadMagic: return "bad magic";
        case WireError::BadVersion: return "unsupported version";
        case WireError::BadPayloadType: return "wrong payload type";
        case WireError::BadMatrixKind: return "bad matrix kind";
        case WireError::BadParams: return "implausible parameters";
        case WireError::UnexpectedEnd: return "unexpected end";
        case WireError::TrailingBytes: return "trailing bytes";
        case WireError::ElementOutOfRange: return "element out of range";
        case WireError::PermutationNotBijective: return "permutation not bijective";
        case WireError::ZeroGammaEntry: return "zero scaling entry";
        case WireError::BadChallengeBit: return "bad challenge bit";
        case WireError::BadDisclosureVariant: return "bad disclosure variant";
    }
    return "unknown";
}

namespace {

constexpr std::uint8_t wire_version = 0x01;
constexpr std::array<std::uint8_t, 4> magic = {'Q', 'S', 'D', 'I'};

[[noreturn]] void fail(WireError code) { throw WireException(code, to_string(code)); }

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8() {
        if (pos_ >= data_.size()) fail(WireError::UnexpectedEnd);
        return data_[pos_++];
    }
    std::uint16_t u16_be() {
        const std::uint16_t hi = u8();
        return static_cast<std::uint16_t>((hi << 8) | u8());
    }
    std::span<const std::uint8_t> take(std::size_t count) {
        if (pos_ + count > data_.size()) fail(WireError::UnexpectedEnd);
        auto out = data_.subspan(pos_, count);
        pos_ += count;
        return out;
    }
    void expect_end() const {
        if (pos_ != data_.size()) fail(WireError::TrailingBytes);
    }

private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

void put_u16_be(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_header(std::vector<std::uint8_t>& out, PayloadType type, const SchemeParams& p,
                std::size_t rounds) {
    out.insert(out.end(), magic.begin(), magic.end());
    out.push_back(wire_version);
    out.push_back(static_cast<std::uint8_t>(type));
    out.push_back(static_cast<std::uint8_t>(p.matrix_kind));
    put_u16_be(out, static_cast<std::uint16_t>(p.q()));
    put_u16_be(out, static_cast<std::uint16_t>(p.n));
    put_u16_be(out, static_cast<std::uint16_t>(p.k));
    put_u16_be(out, static_cast<std::uint16_t>(p.secret_weight));
    put_u16_be(out, static_cast<std::uint16_t>(rounds));
    put_u16_be(out, static_cast<std::uint16_t>(p.commit_bits));
    put_u16_be(out, static_cast<std::uint16_t>(p.sigma_seed_bits));
    put_u16_be(out, static_cast<std::uint16_t>(p.gamma_seed_bits));
}

SchemeParams read_header(ByteReader& r, PayloadType expected_type) {
    for (std::uint8_t m : magic)
        if (r.u8() != m) fail(WireError::BadMagic);
    if (r.u8() != wire_version) fail(WireError::BadVersion);
    if (r.u8() != static_cast<std::uint8_t>(expected_type)) fail(WireError::BadPayloadType);
    const std::uint8_t kind_byte = r.u8();
    if (kind_byte > 1) fail(WireError::BadMatrixKind);

    const unsigned q = r.u16_be();
    const std::size_t n = r.u16_be();
    const std::size_t k = r.u16_be();
    const std::size_t w = r.u16_be();
    const std::size_t rounds = r.u16_be();
    const unsigned lh = r.u16_be();
    const unsigned lsigma = r.u16_be();
    const unsigned lgamma = r.u16_be();

    if (!Field::supported_order(q)) fail(WireError::BadParams);
    SchemeParams p{Field::of_order(q), n, k, w, rounds, 0, lh, lsigma, lgamma,
                   static_cast<MatrixKind>(kind_byte), "custom"};
    if (n == 0 || k == 0 || k >= n || n > 256 || w == 0 || w > n) fail(WireError::BadParams);
    if (p.matrix_kind == MatrixKind::DoubleCirculant && n != 2 * k) fail(WireError::BadParams);
    if (lh == 0 || lh % 8 != 0 || lh > 256) fail(WireError::BadParams);
    if (lsigma == 0 || lsigma % 8 != 0 || lgamma == 0 || lgamma % 8 != 0)
        fail(WireError::BadParams);

    // Recover the published name and security exponent when they apply.
    for (const char* name : {"param80", "param128"}) {
        const auto named = named_params(name, p.matrix_kind);
        if (named && p.field == named->field && n == named->n && k == named->k &&
            w == named->secret_weight && lh == named->commit_bits &&
            lsigma == named->sigma_seed_bits && lgamma == named->gamma_seed_bits) {
            p.kappa = named->kappa;
            p.name = name;
        }
    }
    return p;
}

Vec read_vec(ByteReader& r, const Field& f, std::size_t n) {
    auto bytes = r.take(n);
    for (std::uint8_t b : bytes)
        if (!f.contains(b)) fail(WireError::ElementOutOfRange);
    return Vec::from_bytes(f, bytes);
}

Commitment read_commitment(ByteReader& r, unsigned commit_bits) {
    auto bytes = r.take(commit_bits / 8);
    return Commitment(bytes.begin(), bytes.end());
}

void put_disclosure(std::vector<std::uint8_t>& out, const Disclosure& d) {
    if (const auto* seeds = std::get_if<SeedPair>(&d)) {
        out.push_back(0x00);
        out.insert(out.end(), seeds->sigma_seed.begin(), seeds->sigma_seed.end());
        out.insert(out.end(), seeds->gamma_seed.begin(), seeds->gamma_seed.end());
    } else {
        out.push_back(0x01);
        const Vec& image_s = std::get<Vec>(d);
        out.insert(out.end(), image_s.bytes().begin(), image_s.bytes().end());
    }
}

Disclosure read_disclosure(ByteReader& r, const SchemeParams& p) {
    const std::uint8_t variant = r.u8();
    if (variant == 0x00) {
        auto s1 = r.take(p.sigma_seed_bits / 8);
        auto s2 = r.take(p.gamma_seed_bits / 8);
        return Disclosure(SeedPair{std::vector<std::uint8_t>(s1.begin(), s1.end()),
                                   std::vector<std::uint8_t>(s2.begin(), s2.end())});
    }
    if (variant == 0x01) return Disclosure(read_vec(r, p.field, p.n));
    fail(WireError::BadDisclosureVariant);
}

} // namespace

std::vector<std::uint8_t> encode_public_key(const PublicKey& pk) {
    std::vector<std::uint8_t> out;
    put_header(out, PayloadType::PublicKey, pk.params, pk.params.rounds);
    if (pk.params.matrix_kind == MatrixKind::RandomSystematic) {
        const auto bytes = pk.h.m_block().bytes();
        out.insert(out.end(), bytes.begin(), bytes.end());
    } else {
        const auto bytes = pk.h.circ_row().bytes();
        out.insert(out.end(), bytes.begin(), bytes.end());
    }
    out.insert(out.end(), pk.y.bytes().begin(), pk.y.bytes().end());
    return out;
}

PublicKey decode_public_key(std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    SchemeParams p = read_header(r, PayloadType::PublicKey);
    if (p.matrix_kind == MatrixKind::RandomSystematic) {
        auto data = r.take(p.r() * p.k);
        for (std::uint8_t b : data)
            if (!p.field.contains(b)) fail(WireError::ElementOutOfRange);
        Mat m(p.field, p.r(), p.k, std::vector<std::uint8_t>(data.begin(), data.end()));
        Vec y = read_vec(r, p.field, p.r());
        r.expect_end();
        return PublicKey{p, ParityCheck::systematic(std::move(m)), std::move(y)};
    }
    Vec row = read_vec(r, p.field, p.r());
    Vec y = read_vec(r, p.field, p.r());
    r.expect_end();
    return PublicKey{p, ParityCheck::circulant_form(std::move(row)), std::move(y)};
}

std::vector<std::uint8_t> encode_private_key(const SchemeParams& p, const PrivateKey& sk) {
    std::vector<std::uint8_t> out;
    put_header(out, PayloadType::PrivateKey, p, p.rounds);
    out.insert(out.end(), sk.s.bytes().begin(), sk.s.bytes().end());
    return out;
}

std::pair<SchemeParams, PrivateKey> decode_private_key(std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    SchemeParams p = read_header(r, PayloadType::PrivateKey);
    Vec s = read_vec(r, p.field, p.n);
    r.expect_end();
    return {p, PrivateKey{std::move(s)}};
}

std::vector<std::uint8_t> encode_transcripts(const SchemeParams& p,
                                             const std::vector<RoundTranscript>& rounds) {
    std::vector<std::uint8_t> out;
    put_header(out, PayloadType::Transcript, p, rounds.size());
    for (const RoundTranscript& t : rounds) {
        out.insert(out.end(), t.c1.begin(), t.c1.end());
        out.insert(out.end(), t.c2.begin(), t.c2.end());
        out.push_back(t.alpha);
        out.insert(out.end(), t.beta.bytes().begin(), t.beta.bytes().end());
        out.push_back(t.b);
        put_disclosure(out, t.disclosure);
    }
    return out;
}

std::pair<SchemeParams, std::vector<RoundTranscript>>
decode_transcripts(std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    SchemeParams p = read_header(r, PayloadType::Transcript);
    std::vector<RoundTranscript> rounds;
    rounds.reserve(p.rounds);
    for (std::size_t i = 0; i < p.rounds; ++i) {
        Commitment c1 = read_commitment(r, p.commit_bits);
        Commitment c2 = read_commitment(r, p.commit_bits);
        const std::uint8_t alpha = r.u8();
        if (!p.field.contains(alpha)) fail(WireError::ElementOutOfRange);
        Vec beta = read_vec(r, p.field, p.n);
        const std::uint8_t b = r.u8();
        if (b > 1) fail(WireError::BadChallengeBit);
        Disclosure d = read_disclosure(r, p);
        const bool is_seed_variant = std::holds_alternative<SeedPair>(d);
        if ((b == 0) != is_seed_variant) fail(WireError::BadDisclosureVariant);
        rounds.push_back(RoundTranscript{std::move(c1), std::move(c2), alpha, std::move(beta), b,
                                         std::move(d)});
    }
    r.expect_end();
    return {p, std::move(rounds)};
}

std::vector<std::uint8_t> encode_signature(const Signature& sig) {
    std::vector<std::uint8_t> out;
    put_header(out, PayloadType::Signature, sig.params, sig.rounds.size());
    for (const SignatureRound& t : sig.rounds) {
        out.insert(out.end(), t.c1.begin(), t.c1.end());
        out.insert(out.end(), t.c2.begin(), t.c2.end());
        out.insert(out.end(), t.beta.bytes().begin(), t.beta.bytes().end());
        put_disclosure(out, t.disclosure);
    }
    return out;
}

Signature decode_signature(std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    SchemeParams p = read_header(r, PayloadType::Signature);
    Signature sig{p, {}};
    sig.rounds.reserve(p.rounds);
    for (std::size_t i = 0; i < p.rounds; ++i) {
        Commitment c1 = read_commitment(r, p.commit_bits);
        Commitment c2 = read_commitment(r, p.commit_bits);
        Vec beta = read_vec(r, p.field, p.n);
        Disclosure d = read_disclosure(r, p);
        sig.rounds.push_back(
            SignatureRound{std::move(c1), std::move(c2), std::move(beta), std::move(d)});
    }
    r.expect_end();
    return sig;
}

std::vector<std::uint8_t> encode_transform(const Transform& t) {
    std::vector<std::uint8_t> out;
    out.reserve(2 * t.size());
    for (std::uint32_t p : t.perm) out.push_back(static_cast<std::uint8_t>(p));
    out.insert(out.end(), t.gamma.bytes().begin(), t.gamma.bytes().end());
    return out;
}

Transform decode_transform(std::span<const std::uint8_t> bytes, const Field& f, std::size_t n) {
    ByteReader r(bytes);
    auto perm_bytes = r.take(n);
    std::vector<std::uint32_t> perm(perm_bytes.begin(), perm_bytes.end());
    std::vector<bool> seen(n, false);
    for (std::uint32_t p : perm) {
        if (p >= n || seen[p]) fail(WireError::PermutationNotBijective);
        seen[p] = true;
    }
    auto gamma_bytes = r.take(n);
    for (std::uint8_t g : gamma_bytes) {
        if (!f.contains(g)) fail(WireError::ElementOutOfRange);
        if (g == 0) fail(WireError::ZeroGammaEntry);
    }
    r.expect_end();
    return Transform{std::move(perm), Vec::from_bytes(f, gamma_bytes)};
}

} // namespace qsdi
