// Command-line driver: key generation, in-process identification runs,
// signing and verification, cost metrics, Gilbert-Varshamov checks, and the
// cheating-prover Monte-Carlo estimator. Machine-readable output is key=value
// lines on stdout.
//
// Exit codes: 0 success/accept, 1 protocol or signature reject,
// 2 usage error, 3 file or decode error, 4 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsdi/costs.hpp"
#include "qsdi/keys.hpp"
#include "qsdi/protocol.hpp"
#include "qsdi/signature.hpp"
#include "qsdi/wire.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_reject = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;
constexpr int exit_internal = 4;

std::vector<std::uint8_t> parse_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw CLI::ValidationError("seed", "hex string of odd length");
    std::vector<std::uint8_t> out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const auto nibble = [&](char c) -> unsigned {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            throw CLI::ValidationError("seed", "not a hex string");
        };
        out.push_back(static_cast<std::uint8_t>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
    }
    return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

std::vector<std::uint8_t> seed_or_fresh(const std::string& hex) {
    if (!hex.empty()) return parse_hex(hex);
    std::random_device rd;
    std::vector<std::uint8_t> seed(16);
    for (auto& b : seed) b = static_cast<std::uint8_t>(rd());
    std::cout << "seed=" << to_hex(seed) << "\n";
    return seed;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

struct ParamArgs {
    std::string name = "param80";
    std::string kind = "random";
    unsigned q = 0;
    std::size_t n = 0, k = 0, w = 0;
    std::size_t rounds = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--params", name, "param80, param128, or custom")
            ->check(CLI::IsMember({"param80", "param128", "custom"}));
        cmd->add_option("--kind", kind, "matrix structure")
            ->check(CLI::IsMember({"random", "circulant"}));
        cmd->add_option("--q", q, "field order (custom)");
        cmd->add_option("--n", n, "code length (custom)");
        cmd->add_option("--k", k, "code dimension (custom)");
        cmd->add_option("--w", w, "secret weight (custom)");
    }

    qsdi::SchemeParams resolve() const {
        const qsdi::MatrixKind mk = kind == "circulant" ? qsdi::MatrixKind::DoubleCirculant
                                                        : qsdi::MatrixKind::RandomSystematic;
        if (name != "custom") {
            auto p = qsdi::named_params(name, mk);
            if (!p) throw CLI::ValidationError("--params", "unknown parameter set");
            if (rounds != 0) p->rounds = rounds;
            return *p;
        }
        if (q == 0 || n == 0 || k == 0 || w == 0)
            throw CLI::ValidationError("--params", "custom requires --q --n --k --w");
        if (!qsdi::Field::supported_order(q))
            throw CLI::ValidationError("--q", "unsupported field order");
        qsdi::SchemeParams p{qsdi::Field::of_order(q), n, k, w,
                             rounds == 0 ? 16 : rounds, 0, 128, 128, 128, mk, "custom"};
        return p;
    }
};

void print_validation(const qsdi::ValidationReport& rep) {
    std::printf("gv_weight=%.3f\n", rep.gv_weight);
    std::cout << "on_gv_bound=" << (rep.on_gv_bound ? 1 : 0) << "\n";
    std::cout << "kappa_status="
              << (rep.kappa_status == qsdi::KappaStatus::Published ? "published" : "unverified")
              << "\n";
    for (const auto& w : rep.warnings) std::cout << "warning=" << w << "\n";
    for (const auto& e : rep.errors) std::cout << "error=" << e << "\n";
}

int cmd_keygen(const ParamArgs& pa, const std::string& seed_hex, const std::string& out_prefix) {
    const qsdi::SchemeParams p = pa.resolve();
    const auto rep = qsdi::validate_params(p);
    print_validation(rep);
    if (!rep.ok) return exit_usage;

    const auto seed = seed_or_fresh(seed_hex);
    const qsdi::KeyPair kp = qsdi::keygen(p, seed);
    const auto pk_bytes = qsdi::encode_public_key(kp.pk);
    const auto sk_bytes = qsdi::encode_private_key(p, kp.sk);
    write_file(out_prefix + ".pk", pk_bytes);
    write_file(out_prefix + ".sk", sk_bytes);
    std::cout << "pk_file=" << out_prefix << ".pk\n";
    std::cout << "sk_file=" << out_prefix << ".sk\n";
    std::cout << "pk_file_bytes=" << pk_bytes.size() << "\n";
    std::cout << "sk_file_bytes=" << sk_bytes.size() << "\n";
    const std::size_t matrix_bytes =
        p.matrix_kind == qsdi::MatrixKind::RandomSystematic ? p.r() * p.k : p.r();
    std::cout << "pk_matrix_payload_bits=" << 8 * matrix_bytes << "\n";
    std::cout << "pk_syndrome_payload_bits=" << 8 * p.r() << "\n";
    std::cout << "sk_payload_bits=" << 8 * p.n << "\n";
    return exit_ok;
}

int cmd_identify(const std::string& pk_file, const std::string& sk_file, std::size_t rounds,
                 const std::string& seed_hex, const std::string& transcript_file) {
    const auto pk = qsdi::decode_public_key(read_file(pk_file));
    const auto [sk_params, sk] = qsdi::decode_private_key(read_file(sk_file));
    if (!sk_params.same_scheme(pk.params)) {
        std::cout << "accepted=0\nreason=key parameter mismatch\n";
        return exit_reject;
    }
    if (rounds == 0) rounds = pk.params.rounds;
    const auto seed = seed_or_fresh(seed_hex);
    const auto outcome = qsdi::run_identification(pk, sk, rounds, seed, !transcript_file.empty());
    std::cout << "rounds=" << outcome.rounds_run << "\n";
    std::cout << "accepted=" << (outcome.accepted ? 1 : 0) << "\n";
    if (!outcome.accepted) {
        std::cout << "failed_round=" << outcome.failed_round << "\n";
        std::cout << "reason=" << qsdi::to_string(outcome.reason) << "\n";
    }
    if (!transcript_file.empty()) {
        write_file(transcript_file, qsdi::encode_transcripts(pk.params, outcome.transcripts));
        std::cout << "transcript_file=" << transcript_file << "\n";
    }
    return outcome.accepted ? exit_ok : exit_reject;
}

int cmd_sign(const std::string& pk_file, const std::string& sk_file, const std::string& msg_file,
             const std::string& seed_hex, const std::string& out_file, std::size_t rounds) {
    const auto pk = qsdi::decode_public_key(read_file(pk_file));
    const auto [sk_params, sk] = qsdi::decode_private_key(read_file(sk_file));
    if (!sk_params.same_scheme(pk.params)) {
        std::cout << "signed=0\nreason=key parameter mismatch\n";
        return exit_reject;
    }
    const auto message = read_file(msg_file);
    if (rounds == 0) rounds = qsdi::default_signature_rounds(pk.params);
    const auto seed = seed_or_fresh(seed_hex);
    const qsdi::Signature sig = qsdi::sign(pk, sk, message, seed, rounds);
    const auto bytes = qsdi::encode_signature(sig);
    write_file(out_file, bytes);
    std::cout << "signed=1\nrounds=" << rounds << "\nsignature_file=" << out_file
              << "\nsignature_bytes=" << bytes.size() << "\n";
    return exit_ok;
}

int cmd_verify(const std::string& pk_file, const std::string& msg_file,
               const std::string& sig_file) {
    const auto pk = qsdi::decode_public_key(read_file(pk_file));
    const auto message = read_file(msg_file);
    const qsdi::Signature sig = qsdi::decode_signature(read_file(sig_file));
    const auto res = qsdi::verify_signature(pk, message, sig);
    std::cout << "accepted=" << (res.accepted ? 1 : 0) << "\n";
    if (!res.accepted) std::cout << "reason=" << res.reason << "\n";
    return res.accepted ? exit_ok : exit_reject;
}

int cmd_metrics(const ParamArgs& pa, unsigned lh_override, const std::string& transcript_file) {
    qsdi::SchemeParams p = pa.resolve();
    if (lh_override != 0) {
        if (lh_override % 8 != 0 || lh_override > 256)
            throw CLI::ValidationError("--lh", "must be a multiple of 8 up to 256");
        p.commit_bits = lh_override;
        p.name = "custom";
    }
    const qsdi::CostReport rep = qsdi::cost_report(p);
    std::cout << qsdi::format_cost_table(rep) << "\n";
    std::cout << qsdi::encode_cost_report(rep);
    if (!transcript_file.empty()) {
        const auto [tp, rounds] = qsdi::decode_transcripts(read_file(transcript_file));
        std::cout << "transcript_rounds=" << rounds.size() << "\n";
        std::cout << "transcript_formula_bits=" << qsdi::formula_transcript_bits(tp, rounds)
                  << "\n";
        std::cout << "transcript_measured_bits=" << qsdi::measured_transcript_bits(tp, rounds)
                  << "\n";
    }
    return exit_ok;
}

int cmd_soundness(const ParamArgs& pa, std::size_t trials, const std::string& seed_hex) {
    const qsdi::SchemeParams p = pa.resolve();
    const auto seed = seed_or_fresh(seed_hex);
    const auto est = qsdi::soundness_monte_carlo(p, trials, seed);
    std::cout << "trials=" << est.trials << "\n";
    std::cout << "successes=" << est.successes << "\n";
    std::printf("rate=%.6f\n", est.rate);
    std::printf("bound=%.6f\n", est.bound);
    std::printf("abs_error=%.6f\n", std::abs(est.rate - est.bound));
    return exit_ok;
}

int cmd_gv_check(const ParamArgs& pa) {
    const qsdi::SchemeParams p = pa.resolve();
    const double rate = double(p.k) / double(p.n);
    const double delta = qsdi::gv_relative_distance(rate, p.q());
    std::cout << "q=" << p.q() << "\nn=" << p.n << "\nk=" << p.k << "\nw=" << p.secret_weight
              << "\n";
    std::printf("rate=%.6f\n", rate);
    std::printf("gv_relative_distance=%.9f\n", delta);
    std::printf("gv_weight=%.3f\n", delta * double(p.n));
    std::printf("entropy_at_gv=%.9f\n", qsdi::q_ary_entropy(delta, p.q()));
    print_validation(qsdi::validate_params(p));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-knowledge identification over F_q from syndrome decoding"};
    app.require_subcommand(1);

    auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
    ParamArgs kg_params;
    kg_params.attach(keygen_cmd);
    std::string kg_seed, kg_out;
    keygen_cmd->add_option("--seed", kg_seed, "hex seed (fresh random if omitted)");
    keygen_cmd->add_option("--out", kg_out, "output path prefix")->required();

    auto* id_cmd = app.add_subcommand("identify", "run the interactive protocol in-process");
    std::string id_pk, id_sk, id_seed, id_transcript;
    std::size_t id_rounds = 0;
    id_cmd->add_option("--pk", id_pk, "public key file")->required();
    id_cmd->add_option("--sk", id_sk, "private key file")->required();
    id_cmd->add_option("--rounds", id_rounds, "round count (default: parameter set rounds)");
    id_cmd->add_option("--seed", id_seed, "hex seed");
    id_cmd->add_option("--transcript", id_transcript, "dump the round transcripts to a file");

    auto* sign_cmd = app.add_subcommand("sign", "sign a message file");
    std::string sg_pk, sg_sk, sg_msg, sg_seed, sg_out = "message.sig";
    std::size_t sg_rounds = 0;
    sign_cmd->add_option("--pk", sg_pk)->required();
    sign_cmd->add_option("--sk", sg_sk)->required();
    sign_cmd->add_option("--msg", sg_msg, "message file")->required();
    sign_cmd->add_option("--seed", sg_seed, "hex seed");
    sign_cmd->add_option("--out", sg_out, "signature file");
    sign_cmd->add_option("--rounds", sg_rounds,
                         "round count (default: enough for the set's security exponent)");

    auto* ver_cmd = app.add_subcommand("verify", "verify a signature");
    std::string vf_pk, vf_msg, vf_sig;
    ver_cmd->add_option("--pk", vf_pk)->required();
    ver_cmd->add_option("--msg", vf_msg)->required();
    ver_cmd->add_option("--sig", vf_sig)->required();

    auto* met_cmd = app.add_subcommand("metrics", "analytic size and operation counts");
    ParamArgs met_params;
    met_params.attach(met_cmd);
    std::string met_transcript;
    unsigned met_lh = 0;
    met_cmd->add_option("--rounds", met_params.rounds, "round count override");
    met_cmd->add_option("--lh", met_lh, "commitment digest length override (bits)");
    met_cmd->add_option("--transcript", met_transcript, "also measure a dumped transcript");

    auto* snd_cmd = app.add_subcommand("soundness-sim", "cheating-prover Monte-Carlo estimate");
    ParamArgs snd_params;
    snd_params.name = "custom";
    snd_params.attach(snd_cmd);
    std::size_t snd_trials = 100000;
    std::string snd_seed;
    snd_cmd->add_option("--trials", snd_trials, "trial count");
    snd_cmd->add_option("--seed", snd_seed, "hex seed");

    auto* gv_cmd = app.add_subcommand("gv-check", "Gilbert-Varshamov bound report");
    ParamArgs gv_params;
    gv_params.attach(gv_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (keygen_cmd->parsed()) return cmd_keygen(kg_params, kg_seed, kg_out);
        if (id_cmd->parsed()) return cmd_identify(id_pk, id_sk, id_rounds, id_seed, id_transcript);
        if (sign_cmd->parsed()) return cmd_sign(sg_pk, sg_sk, sg_msg, sg_seed, sg_out, sg_rounds);
        if (ver_cmd->parsed()) return cmd_verify(vf_pk, vf_msg, vf_sig);
        if (met_cmd->parsed()) return cmd_metrics(met_params, met_lh, met_transcript);
        if (snd_cmd->parsed()) return cmd_soundness(snd_params, snd_trials, snd_seed);
        if (gv_cmd->parsed()) return cmd_gv_check(gv_params);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const qsdi::WireException& e) {
        std::cerr << "decode error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}
