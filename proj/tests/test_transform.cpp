#include <doctest.h>

#include <map>

#include "qsdi/commit.hpp"
#include "qsdi/transform.hpp"
#include "test_util.hpp"

using namespace qsdi;
using qsdi_test::seed_bytes;

namespace {

Transform random_transform(const Field& f, std::size_t n, std::uint64_t seed) {
    SeededStream master(seed_bytes(seed));
    const auto s1 = master.bytes(16);
    const auto s2 = master.bytes(16);
    return derive_transform(s1, s2, n, f);
}

Vec random_vector(const Field& f, std::size_t n, SeededStream& st) {
    Vec v(f, n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, st.field_element(f));
    return v;
}

} // namespace

TEST_SUITE("transform") {

TEST_CASE("identity transform leaves vectors alone") {
    const Field f5 = Field::prime(5);
    const Transform t{{0, 1, 2}, Vec(f5, {1, 1, 1})};
    const Vec v(f5, {4, 1, 2});
    CHECK(apply_transform(t, v) == v);
    CHECK(invert_transform(t, v) == v);
    CHECK(is_zero(apply_transform(t, Vec(f5, 3))));
}

TEST_CASE("hand-evaluated three-coordinate example") {
    const Field f5 = Field::prime(5);
    // 1-indexed images (2, 3, 1), scaling (1, 2, 3).
    const Transform t{{1, 2, 0}, Vec(f5, {1, 2, 3})};
    CHECK(apply_transform(t, Vec(f5, {4, 1, 2})) == Vec(f5, {2, 1, 4}));
    CHECK(invert_transform(t, Vec(f5, {2, 1, 4})) == Vec(f5, {4, 1, 2}));
}

TEST_CASE("apply and invert are inverse bijections on random inputs") {
    const Field f = Field::gf256();
    SeededStream st(seed_bytes(5));
    for (int i = 0; i < 200; ++i) {
        const Transform t = random_transform(f, 64, 900 + i);
        const Vec v = random_vector(f, 64, st);
        CHECK(invert_transform(t, apply_transform(t, v)) == v);
        CHECK(apply_transform(t, invert_transform(t, v)) == v);
    }
    const Transform t = random_transform(f, 8, 1);
    CHECK_THROWS_AS((void)apply_transform(t, Vec(f, 7)), std::invalid_argument);
}

TEST_CASE("derivation is deterministic and always nonzero") {
    const Field f = Field::gf256();
    const auto s1 = seed_bytes(10), s2 = seed_bytes(20);
    const Transform a = derive_transform(s1, s2, 128, f);
    const Transform b = derive_transform(s1, s2, 128, f);
    CHECK(a.perm == b.perm);
    CHECK(a.gamma == b.gamma);
    CHECK(is_valid_transform(a));
    SeededStream master(seed_bytes(321));
    for (int i = 0; i < 10000; ++i) {
        const auto g = derive_transform(master.bytes(8), master.bytes(8), 8, f).gamma;
        CHECK(weight(g) == 8);
    }
}

TEST_CASE("derived permutations are uniform") {
    const Field f5 = Field::prime(5);
    SeededStream master(seed_bytes(777));
    const std::size_t trials = 100000;
    std::map<std::vector<std::uint32_t>, std::size_t> counts;
    for (std::size_t t = 0; t < trials; ++t)
        ++counts[derive_transform(master.bytes(8), master.bytes(4), 4, f5).perm];
    CHECK(counts.size() == 24);
    for (const auto& [perm, c] : counts)
        CHECK(std::abs(double(c) / double(trials) - 1.0 / 24.0) <= 0.005);
}

TEST_CASE("scalar linearity, additivity and weight preservation") {
    const Field f = Field::gf256();
    SeededStream st(seed_bytes(42));
    for (int i = 0; i < 500; ++i) {
        const Transform t = random_transform(f, 32, 3000 + i);
        const Vec u = random_vector(f, 32, st);
        const Vec v = random_vector(f, 32, st);
        const std::uint8_t alpha = st.field_element(f);
        CHECK(apply_transform(t, scale(alpha, v)) == scale(alpha, apply_transform(t, v)));
        CHECK(apply_transform(t, add(u, v)) == add(apply_transform(t, u), apply_transform(t, v)));
        CHECK(weight(apply_transform(t, v)) == weight(v));
    }
}

TEST_CASE("exhaustive bijection check for n=2 over F_3") {
    const Field f3 = Field::prime(3);
    for (const auto& perm : {std::vector<std::uint32_t>{0, 1}, std::vector<std::uint32_t>{1, 0}}) {
        for (std::uint8_t g0 : {1, 2}) {
            for (std::uint8_t g1 : {1, 2}) {
                const Transform t{perm, Vec(f3, {g0, g1})};
                std::map<std::vector<std::uint8_t>, int> images;
                for (std::uint8_t a = 0; a < 3; ++a)
                    for (std::uint8_t b = 0; b < 3; ++b) {
                        const Vec v(f3, {a, b});
                        const Vec w = apply_transform(t, v);
                        ++images[{w[0], w[1]}];
                        CHECK(invert_transform(t, w) == v);
                        CHECK(weight(w) == weight(v));
                        for (std::uint8_t alpha = 0; alpha < 3; ++alpha)
                            CHECK(apply_transform(t, scale(alpha, v)) == scale(alpha, w));
                    }
                CHECK(images.size() == 9);
            }
        }
    }
}

TEST_CASE("commitments are deterministic and length-exact") {
    const Field f5 = Field::prime(5);
    const Transform t{{1, 2, 0}, Vec(f5, {1, 2, 3})};
    const Vec synd(f5, {3, 4});
    const Commitment c = commit_c1(t, synd, 128);
    CHECK(c.size() == 16);
    CHECK(c == commit_c1(t, synd, 128));
    CHECK(commit_c1(t, synd, 256).size() == 32);
    CHECK_THROWS_AS((void)commit_c1(t, synd, 12), std::invalid_argument);

    Vec tweaked = synd;
    tweaked.set(0, 4);
    CHECK(commit_c1(t, tweaked, 128) != c);

    const Vec iu(f5, {0, 1, 1});
    const Vec is(f5, {2, 3, 4});
    const Commitment c2 = commit_c2(iu, is, 128);
    CHECK(c2 == commit_c2(iu, is, 128));
    Vec iu2 = iu;
    iu2.set(2, 0);
    CHECK(commit_c2(iu2, is, 128) != c2);
    CHECK_THROWS_AS((void)commit_c2(iu, Vec(f5, 2), 128), std::invalid_argument);
}

TEST_CASE("commitment domains are separated on identical payloads") {
    const Field f5 = Field::prime(5);
    // Both hash the payload bytes 00 01 01 02 03 04 after the domain byte.
    const Transform t{{0, 1}, Vec(f5, {1, 2})};
    const Commitment c1 = commit_c1(t, Vec(f5, {3, 4}), 128);
    const Commitment c2 = commit_c2(Vec(f5, {0, 1, 1}), Vec(f5, {2, 3, 4}), 128);
    CHECK(c1 != c2);
}

} // TEST_SUITE
