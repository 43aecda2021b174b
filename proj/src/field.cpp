#include "qsdi/field.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace qsdi {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// GF(2)[x] remainder of a mod b, both as bitmasks.
unsigned gf2_poly_mod(unsigned a, unsigned b) {
    const unsigned wb = std::bit_width(b);
    while (a != 0 && std::bit_width(a) >= wb) {
        a ^= b << (std::bit_width(a) - wb);
    }
    return a;
}

bool is_irreducible_gf2(unsigned poly, unsigned degree) {
    if (std::bit_width(poly) != degree + 1) return false;
    if ((poly & 1u) == 0) return false; // x divides
    for (unsigned d = 1; 2 * d <= degree; ++d) {
        for (unsigned f = (1u << d); f < (2u << d); ++f) {
            if (gf2_poly_mod(poly, f) == 0) return false;
        }
    }
    return true;
}

// Carry-less multiply followed by reduction; used only to bootstrap the
// log/antilog tables.
std::uint8_t clmul_reduce(std::uint8_t a, std::uint8_t b, unsigned poly, unsigned degree) {
    unsigned acc = 0;
    unsigned aa = a;
    for (unsigned bb = b; bb != 0; bb >>= 1) {
        if (bb & 1u) acc ^= aa;
        aa <<= 1;
        if (aa & (1u << degree)) aa ^= poly;
    }
    return static_cast<std::uint8_t>(acc);
}

// Default (irreducible) reduction polynomials per extension degree.
unsigned canonical_poly(unsigned degree) {
    switch (degree) {
        case 2: return 0x7;   // x^2+x+1
        case 3: return 0xB;   // x^3+x+1
        case 4: return 0x13;  // x^4+x+1
        case 5: return 0x25;  // x^5+x^2+1
        case 6: return 0x43;  // x^6+x+1
        case 7: return 0x83;  // x^7+x+1
        case 8: return 0x11B; // x^8+x^4+x^3+x+1
        default: throw std::invalid_argument("no canonical polynomial for degree " + std::to_string(degree));
    }
}

} // namespace

Field::Field(FieldKind kind, unsigned q, unsigned modulus)
    : kind_(kind), q_(q), modulus_(modulus), nbits_(std::bit_width(q - 1)) {
    if (kind_ == FieldKind::BinaryExtension) {
        unsigned degree = std::bit_width(q_) - 1;
        // Find a multiplicative generator and fill the tables.
        auto t = std::make_shared<LogTables>();
        for (unsigned g = 2; g < q_; ++g) {
            unsigned order = 1;
            std::uint8_t x = clmul_reduce(static_cast<std::uint8_t>(g), 1, modulus_, degree);
            while (x != 1) {
                x = clmul_reduce(x, static_cast<std::uint8_t>(g), modulus_, degree);
                ++order;
            }
            if (order == q_ - 1) {
                t->generator = static_cast<std::uint8_t>(g);
                break;
            }
        }
        if (t->generator == 0) throw std::logic_error("no generator found");
        std::uint8_t x = 1;
        for (unsigned i = 0; i + 1 < q_; ++i) {
            t->exp[i] = x;
            t->log[x] = static_cast<std::uint8_t>(i);
            x = clmul_reduce(x, t->generator, modulus_, degree);
        }
        tables_ = std::move(t);
    }
}

Field Field::prime(unsigned q) {
    if (q < 2 || q > 256 || !is_prime(q))
        throw std::invalid_argument("prime field order must be a prime in [2, 256]");
    return Field(FieldKind::Prime, q, q);
}

Field Field::binary_extension(unsigned degree, unsigned reduction_poly) {
    if (degree < 2 || degree > 8)
        throw std::invalid_argument("extension degree must be in [2, 8]");
    if (!is_irreducible_gf2(reduction_poly, degree))
        throw std::invalid_argument("reduction polynomial must be irreducible of the stated degree");
    return Field(FieldKind::BinaryExtension, 1u << degree, reduction_poly);
}

Field Field::of_order(unsigned q) {
    if (q >= 4 && std::has_single_bit(q)) {
        unsigned degree = std::bit_width(q) - 1;
        return binary_extension(degree, canonical_poly(degree));
    }
    return prime(q);
}

bool Field::supported_order(unsigned q) {
    if (q < 2 || q > 256) return false;
    if (q >= 4 && std::has_single_bit(q)) return true;
    return is_prime(q);
}

std::uint8_t Field::pow(std::uint8_t a, unsigned e) const {
    std::uint8_t base = a;
    std::uint8_t acc = 1;
    while (e > 0) {
        if (e & 1u) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint8_t Field::inv(std::uint8_t a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
    if (kind_ == FieldKind::BinaryExtension) {
        const auto& t = *tables_;
        unsigned e = (q_ - 1 - t.log[a]) % (q_ - 1);
        return t.exp[e];
    }
    return pow(a, q_ - 2);
}

} // namespace qsdi
