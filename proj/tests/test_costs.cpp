#include <doctest.h>

#include <cmath>

#include "qsdi/costs.hpp"
#include "qsdi/wire.hpp"
#include "test_util.hpp"

using namespace qsdi;
using qsdi_test::seed_bytes;
using qsdi_test::toy_params;

TEST_SUITE("costs") {

TEST_CASE("public data size formula") {
    CHECK(public_data_bits(param80()) == 33792);
    CHECK(public_data_bits(param128()) == 88192);
    CHECK(public_data_bits(toy_params(2, 2, 1, 1)) == 3);
    CHECK_THROWS_AS((void)public_data_bits(param80(MatrixKind::DoubleCirculant)),
                    std::invalid_argument);
}

TEST_CASE("circulant key size formula") {
    const auto p80 = circulant_key_bits(param80(MatrixKind::DoubleCirculant));
    CHECK(p80.pk_bits == 512);
    CHECK(p80.sk_bits == 1024);
    CHECK(p80.pk_with_syndrome_bits == 1024);

    const auto tiny = circulant_key_bits(toy_params(2, 4, 2, 1, 16, MatrixKind::DoubleCirculant));
    CHECK(tiny.pk_bits == 2);
    CHECK(tiny.sk_bits == 4);
    CHECK(2 * p80.pk_bits == p80.sk_bits);
    CHECK(2 * tiny.pk_bits == tiny.sk_bits);
    CHECK_THROWS_AS((void)circulant_key_bits(param80()), std::invalid_argument);
}

TEST_CASE("communication size formula") {
    CHECK(communication_bits(param128(), 16) == 46224);
    CHECK(communication_bits(param80(), 16) == 30864);
    CHECK(communication_bits(param80(), 0) == 0);
    // published param80 figure is exactly one challenge bit per round lower
    CHECK(communication_bits(param80(), 16) - 16 == 30848);

    // odd averaged term rounds up
    SchemeParams odd = toy_params(2, 3, 1, 1, 1);
    odd.sigma_seed_bits = 8;
    odd.gamma_seed_bits = 8;
    // fixed = 2*128 + 1 + 3 + 1 = 261; averaged = (8 + 8 + 3)/2 = 9.5; total 270.5 -> 271
    CHECK(communication_bits(odd, 1) == 271);
}

TEST_CASE("operation count formula") {
    const auto c128 = computation_counts(param128(), 16);
    CHECK(c128.mults == 7488);
    CHECK(c128.adds == 2912);
    CHECK(std::abs(std::log2(double(c128.mults)) - 12.9) <= 0.05);
    CHECK(std::abs(std::log2(double(c128.adds)) - 11.5) <= 0.05);

    const auto c80 = computation_counts(param80(), 16);
    CHECK(c80.mults == 4640);
    CHECK(c80.adds == 1808);
    CHECK(std::abs(std::log2(double(c80.mults)) - 12.1) <= 0.1);
    CHECK(std::log2(double(c80.adds)) == doctest::Approx(10.82).epsilon(0.001));

    SchemeParams degenerate = toy_params(5, 12, 6, 3, 4);
    degenerate.k = 0;
    degenerate.secret_weight = 0;
    const auto d = computation_counts(degenerate, 4);
    CHECK(d.mults == 4 * 12);
    CHECK(d.adds == 0);
}

TEST_CASE("signature accounting matches communication minus challenges") {
    const SchemeParams p = param80();
    CHECK(signature_average_bits(p, 16) == 30720);
    CHECK(signature_average_bits(p, 16) ==
          communication_bits(p, 16) - 16 * (p.field.bits_per_element() + 1));
}

TEST_CASE("measured transcript bits carry a fixed byte-alignment overhead") {
    const SchemeParams p = param80();
    const KeyPair kp = keygen(p, seed_bytes(1));
    const auto outcome = run_identification(kp.pk, kp.sk, 16, seed_bytes(2), true);
    REQUIRE(outcome.accepted);
    const std::uint64_t measured = measured_transcript_bits(p, outcome.transcripts);
    const std::uint64_t formula = formula_transcript_bits(p, outcome.transcripts);
    // per round: challenge bit stored as a byte (+7) and the variant byte (+8)
    CHECK(measured == formula + 16 * 15);
    // actual-disclosure formula stays within one branch gap of the average
    const std::uint64_t averaged = communication_bits(p, 16);
    const std::uint64_t gap =
        16 * (std::uint64_t(p.n) * p.field.bits_per_element() -
              (p.sigma_seed_bits + p.gamma_seed_bits)) / 2;
    CHECK(formula >= averaged - gap);
    CHECK(formula <= averaged + gap);
}

TEST_CASE("cost reports round-trip through the text codec") {
    for (const auto& p : {param80(), param128(), param80(MatrixKind::DoubleCirculant),
                          toy_params(5, 12, 6, 3)}) {
        const CostReport r = cost_report(p);
        const std::string text = encode_cost_report(r);
        const CostReport back = decode_cost_report(text);
        CHECK(back == r);
        CHECK(encode_cost_report(back) == text);
    }
    CHECK_THROWS_AS((void)decode_cost_report("no equals sign"), std::invalid_argument);
    CHECK_THROWS_AS((void)decode_cost_report("name=x\n"), std::invalid_argument);
}

TEST_CASE("published deviations are documented in the report") {
    const std::string text = encode_cost_report(cost_report(param80()));
    CHECK(text.find("communication_bits=30864") != std::string::npos);
    CHECK(text.find("published_communication_bits=30848") != std::string::npos);
    CHECK(text.find("note_communication=") != std::string::npos);
    CHECK(text.find("add_count=1808") != std::string::npos);
    CHECK(text.find("published_log2_adds=11.3") != std::string::npos);
    CHECK(text.find("note_adds=") != std::string::npos);

    const std::string t128 = encode_cost_report(cost_report(param128()));
    CHECK(t128.find("note_communication=") == std::string::npos);
    CHECK(t128.find("note_adds=") == std::string::npos);
}

TEST_CASE("report fields track the parameter set") {
    const CostReport r = cost_report(param80(MatrixKind::DoubleCirculant));
    CHECK(r.circulant_pk_bits == 512);
    CHECK(r.circulant_sk_bits == 1024);
    CHECK(r.min_rounds_16 == 17);
    CHECK(std::abs(r.per_round_exponent - 0.9944) <= 0.0001);
    CHECK(format_cost_table(r).find("512") != std::string::npos);
}

} // TEST_SUITE
