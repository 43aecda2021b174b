#pragma once

#include <array>
#include <cstdint>
#include <memory>

namespace qsdi {

enum class FieldKind : std::uint8_t { Prime, BinaryExtension };

/// The finite field F_q for prime q or q = 2^m (m <= 8).
///
/// Elements are stored as one byte each, values in [0, q). Extension-field
/// multiplication and inversion go through discrete log/antilog tables built
/// at construction; Field::pow is the table-free reference path. Instances
/// are immutable and cheap to copy (tables are shared).
class Field {
public:
    static Field prime(unsigned q);
    static Field binary_extension(unsigned degree, unsigned reduction_poly);
    /// F_256 with reduction polynomial x^8 + x^4 + x^3 + x + 1.
    static Field gf256() { return binary_extension(8, 0x11B); }
    /// Canonical field of order q: prime field for prime q, otherwise the
    /// default reduction polynomial for q = 2^m. Throws for unsupported q.
    static Field of_order(unsigned q);
    static bool supported_order(unsigned q);

    unsigned q() const { return q_; }
    FieldKind kind() const { return kind_; }
    unsigned modulus() const { return modulus_; }
    /// N = ceil(log2 q), bits needed per element on an ideal wire.
    unsigned bits_per_element() const { return nbits_; }
    bool contains(std::uint8_t v) const { return v < q_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
        if (kind_ == FieldKind::BinaryExtension) return a ^ b;
        return static_cast<std::uint8_t>((unsigned(a) + unsigned(b)) % q_);
    }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
        if (kind_ == FieldKind::BinaryExtension) return a ^ b;
        return static_cast<std::uint8_t>((unsigned(a) + q_ - unsigned(b)) % q_);
    }
    std::uint8_t neg(std::uint8_t a) const {
        if (kind_ == FieldKind::BinaryExtension) return a;
        return static_cast<std::uint8_t>((q_ - unsigned(a)) % q_);
    }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        if (kind_ == FieldKind::Prime)
            return static_cast<std::uint8_t>((unsigned(a) * unsigned(b)) % q_);
        if (a == 0 || b == 0) return 0;
        const auto& t = *tables_;
        unsigned s = unsigned(t.log[a]) + unsigned(t.log[b]);
        if (s >= q_ - 1) s -= q_ - 1;
        return t.exp[s];
    }
    /// a^e by square-and-multiply; the reference path for inversion.
    std::uint8_t pow(std::uint8_t a, unsigned e) const;
    /// Multiplicative inverse, a != 0. Throws std::domain_error on 0.
    std::uint8_t inv(std::uint8_t a) const;

    bool operator==(const Field& o) const {
        return kind_ == o.kind_ && q_ == o.q_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    struct LogTables {
        std::array<std::uint8_t, 256> exp{}; // exp[i] = g^i, i in [0, q-1)
        std::array<std::uint8_t, 256> log{}; // log[g^i] = i
        std::uint8_t generator = 0;
    };

    Field(FieldKind kind, unsigned q, unsigned modulus);

    FieldKind kind_;
    unsigned q_;
    unsigned modulus_; // prime q itself, or the reduction polynomial bitmask
    unsigned nbits_;
    std::shared_ptr<const LogTables> tables_; // extension fields only
};

} // namespace qsdi
