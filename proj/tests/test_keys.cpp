#include <doctest.h>

#include "qsdi/keys.hpp"
#include "test_util.hpp"

using namespace qsdi;
using qsdi_test::seed_bytes;
using qsdi_test::toy_params;

TEST_SUITE("keys") {

TEST_CASE("keygen is deterministic in the seed") {
    const SchemeParams p = param80();
    const KeyPair a = keygen(p, seed_bytes(99));
    const KeyPair b = keygen(p, seed_bytes(99));
    const KeyPair c = keygen(p, seed_bytes(100));
    CHECK(a.pk.h == b.pk.h);
    CHECK(a.pk.y == b.pk.y);
    CHECK(a.sk.s == b.sk.s);
    CHECK(a.sk.s != c.sk.s);
}

TEST_CASE("generated pairs satisfy the key equations") {
    const std::vector<SchemeParams> sets = {
        param80(), param80(MatrixKind::DoubleCirculant), toy_params(5, 12, 6, 3),
        toy_params(5, 12, 6, 3, 16, MatrixKind::DoubleCirculant)};
    for (const auto& p : sets) {
        for (std::uint64_t s = 0; s < 100; ++s) {
            const KeyPair kp = keygen(p, seed_bytes(1000 + s));
            CHECK(weight(kp.sk.s) == p.secret_weight);
            CHECK(kp.pk.h.syndrome(kp.sk.s) == kp.pk.y);
            CHECK(kp.pk.h.n() == p.n);
            CHECK(kp.pk.h.r() == p.r());
        }
    }
    for (std::uint64_t s = 0; s < 25; ++s) {
        const KeyPair kp = keygen(param128(), seed_bytes(5000 + s));
        CHECK(weight(kp.sk.s) == 78);
        CHECK(kp.pk.h.syndrome(kp.sk.s) == kp.pk.y);
    }
}

TEST_CASE("circulant syndrome equals the dense product") {
    const SchemeParams p = toy_params(5, 12, 6, 3, 16, MatrixKind::DoubleCirculant);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const KeyPair kp = keygen(p, seed_bytes(s));
        const Mat dense = kp.pk.h.dense();
        SeededStream st(seed_bytes(700 + s));
        Vec x(p.field, p.n);
        for (std::size_t i = 0; i < p.n; ++i) x.set(i, st.field_element(p.field));
        CHECK(kp.pk.h.syndrome(x) == mat_vec(dense, x));
    }
}

TEST_CASE("circulant key material sizes") {
    const KeyPair kp = keygen(param80(MatrixKind::DoubleCirculant), seed_bytes(4));
    CHECK(kp.pk.h.circ_row().size() * kp.pk.params.field.bits_per_element() == 512);
    CHECK(kp.sk.s.size() * kp.pk.params.field.bits_per_element() == 1024);
}

TEST_CASE("fixed-weight sampling edge weights") {
    const Field f5 = Field::prime(5);
    SeededStream st(seed_bytes(8));
    CHECK(is_zero(sample_fixed_weight(f5, 9, 0, st)));
    CHECK(weight(sample_fixed_weight(f5, 9, 9, st)) == 9);
    CHECK_THROWS_AS((void)sample_fixed_weight(f5, 4, 5, st), std::invalid_argument);
}

TEST_CASE("fixed-weight sampling is uniform over supports") {
    const Field f5 = Field::prime(5);
    SeededStream st(seed_bytes(123));
    const std::size_t trials = 100000;
    std::size_t hits[8] = {};
    for (std::size_t t = 0; t < trials; ++t) {
        const Vec v = sample_fixed_weight(f5, 8, 3, st);
        for (std::size_t i = 0; i < 8; ++i)
            if (v[i] != 0) ++hits[i];
    }
    for (std::size_t i = 0; i < 8; ++i) {
        const double freq = double(hits[i]) / double(trials);
        CHECK(std::abs(freq - 3.0 / 8.0) <= 0.01);
    }
}

TEST_CASE("keygen rejects invalid parameters") {
    CHECK_THROWS_AS((void)keygen(toy_params(5, 12, 12, 3), seed_bytes(1)), std::invalid_argument);
}

} // TEST_SUITE
