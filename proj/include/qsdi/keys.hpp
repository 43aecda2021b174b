#pragma once

#include <span>
#include <stdexcept>

#include "qsdi/linalg.hpp"
#include "qsdi/params.hpp"
#include "qsdi/prg.hpp"

namespace qsdi {

/// Parity-check matrix in systematic form: (I_r | M) with M random, or
/// (I_r | C) with C circulant given by its first row. Only the right block
/// is stored; products are computed against the implicit identity.
class ParityCheck {
public:
    static ParityCheck systematic(Mat m_block);
    static ParityCheck circulant_form(Vec first_row);

    MatrixKind kind() const { return kind_; }
    const Field& field() const;
    std::size_t r() const;
    std::size_t k() const;
    std::size_t n() const { return r() + k(); }

    const Mat& m_block() const;
    const Vec& circ_row() const;

    /// H x^T.
    Vec syndrome(const Vec& x) const;
    /// Materialized (I_r | M); small instances and tests.
    Mat dense() const;

    bool operator==(const ParityCheck& o) const;

private:
    ParityCheck(MatrixKind kind, Mat m, Vec row)
        : kind_(kind), m_block_(std::move(m)), circ_row_(std::move(row)) {}

    MatrixKind kind_;
    Mat m_block_;  // r x k, random-systematic kind
    Vec circ_row_; // length r, double-circulant kind
};

struct PublicKey {
    SchemeParams params;
    ParityCheck h;
    Vec y; // syndrome of the secret, length r
};

struct PrivateKey {
    Vec s; // length n, weight exactly params.secret_weight
};

struct KeyPair {
    PublicKey pk;
    PrivateKey sk;
};

class KeygenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Uniform vector of the given exact weight: support by Fisher-Yates prefix,
/// values by rejection over the nonzero elements.
Vec sample_fixed_weight(const Field& f, std::size_t n, std::size_t w, SeededStream& stream);

/// Deterministic key generation from a seed. Random-systematic keys draw a
/// full r x n matrix and reduce it, redrawing up to 16 times if it is rank
/// deficient; double-circulant keys draw the circulant first row.
KeyPair keygen(const SchemeParams& p, std::span<const std::uint8_t> seed);

/// Any solution x of H x^T = y, uniform over the solution space; no weight
/// constraint. Always solvable against a systematic parity check.
Vec solve_syndrome(const ParityCheck& h, const Vec& y, SeededStream& stream);

} // namespace qsdi
