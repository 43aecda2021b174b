#include <doctest.h>

#include <random>

#include "qsdi/field.hpp"

using qsdi::Field;

namespace {

// Independent GF(2^m) product: horner-style shift over the bits of b,
// reducing on every doubling. Oracle only, kept apart from the library path.
std::uint8_t oracle_ext_mul(std::uint8_t a, std::uint8_t b, unsigned poly, unsigned m) {
    unsigned acc = 0;
    for (int i = 7; i >= 0; --i) {
        acc <<= 1;
        if (acc & (1u << m)) acc ^= poly;
        if ((b >> i) & 1u) acc ^= a;
    }
    return static_cast<std::uint8_t>(acc);
}

void check_axioms(const Field& f, std::uint8_t a, std::uint8_t b, std::uint8_t c) {
    CHECK(f.add(a, b) == f.add(b, a));
    CHECK(f.mul(a, b) == f.mul(b, a));
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
}

} // namespace

TEST_SUITE("field") {

TEST_CASE("prime field addition and multiplication") {
    const Field f5 = Field::prime(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.inv(1) == 1);
}

TEST_CASE("gf256 known products") {
    const Field f = Field::gf256();
    CHECK(f.add(0x53, 0xCA) == 0x99);
    CHECK(f.mul(0x02, 0x80) == 0x1B);
    CHECK(f.mul(0x02, 0x83) == 0x1D);
    CHECK(f.inv(1) == 1);
    for (unsigned a = 0; a < 256; ++a) CHECK(f.add(std::uint8_t(a), std::uint8_t(a)) == 0);
}

TEST_CASE("extension multiplication matches the shift-reduce oracle exhaustively") {
    for (unsigned q : {4u, 8u, 16u, 256u}) {
        const Field f = Field::of_order(q);
        const unsigned m = f.bits_per_element();
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b)
                CHECK(f.mul(std::uint8_t(a), std::uint8_t(b)) ==
                      oracle_ext_mul(std::uint8_t(a), std::uint8_t(b), f.modulus(), m));
    }
}

TEST_CASE("inversion agrees with the exponentiation reference path") {
    for (unsigned q : {5u, 13u, 16u, 256u}) {
        const Field f = Field::of_order(q);
        for (unsigned a = 1; a < q; ++a) {
            CHECK(f.mul(std::uint8_t(a), f.inv(std::uint8_t(a))) == 1);
            CHECK(f.inv(std::uint8_t(a)) == f.pow(std::uint8_t(a), q - 2));
        }
    }
    CHECK_THROWS_AS((void)Field::gf256().inv(0), std::domain_error);
}

TEST_CASE("field axioms, exhaustive for small orders") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 11u, 13u, 16u}) {
        const Field f = Field::of_order(q);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b)
                for (unsigned c = 0; c < q; ++c)
                    check_axioms(f, std::uint8_t(a), std::uint8_t(b), std::uint8_t(c));
    }
}

TEST_CASE("field axioms, random triples for large orders") {
    std::mt19937 gen(7);
    for (unsigned q : {251u, 256u}) {
        const Field f = Field::of_order(q);
        std::uniform_int_distribution<unsigned> dist(0, q - 1);
        for (int i = 0; i < 2000; ++i)
            check_axioms(f, std::uint8_t(dist(gen)), std::uint8_t(dist(gen)),
                         std::uint8_t(dist(gen)));
    }
}

TEST_CASE("construction rejects bad orders and polynomials") {
    CHECK_THROWS_AS((void)Field::prime(6), std::invalid_argument);
    CHECK_THROWS_AS((void)Field::of_order(6), std::invalid_argument);
    CHECK_THROWS_AS((void)Field::of_order(9), std::invalid_argument); // odd prime power
    CHECK_THROWS_AS((void)Field::binary_extension(8, 0x11C), std::invalid_argument); // even poly
    CHECK_THROWS_AS((void)Field::binary_extension(8, 0x1B), std::invalid_argument);  // degree 4
    // x^8 + x^4 + x^3 + x^2 + 1 is irreducible too; alternates stay testable.
    const Field alt = Field::binary_extension(8, 0x11D);
    CHECK(alt.q() == 256);
    CHECK(alt != Field::gf256());
    CHECK(alt.mul(2, alt.inv(2)) == 1);
    CHECK(Field::supported_order(2));
    CHECK(Field::supported_order(256));
    CHECK(!Field::supported_order(258));
    CHECK(!Field::supported_order(1));
}

TEST_CASE("bits per element") {
    CHECK(Field::gf256().bits_per_element() == 8);
    CHECK(Field::prime(2).bits_per_element() == 1);
    CHECK(Field::prime(5).bits_per_element() == 3);
    CHECK(Field::of_order(16).bits_per_element() == 4);
}

} // TEST_SUITE
