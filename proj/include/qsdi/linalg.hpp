#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qsdi/field.hpp"

namespace qsdi {

/// Vector over F_q. Entries validated on construction and mutation;
/// operations on vectors are pure functions returning new values.
class Vec {
public:
    Vec(Field f, std::size_t n) : field_(std::move(f)), v_(n, 0) {}
    Vec(Field f, std::vector<std::uint8_t> entries);
    static Vec from_bytes(const Field& f, std::span<const std::uint8_t> bytes);

    const Field& field() const { return field_; }
    std::size_t size() const { return v_.size(); }
    std::uint8_t operator[](std::size_t i) const { return v_[i]; }
    void set(std::size_t i, std::uint8_t value);
    std::span<const std::uint8_t> bytes() const { return v_; }

    bool operator==(const Vec& o) const { return field_ == o.field_ && v_ == o.v_; }
    bool operator!=(const Vec& o) const { return !(*this == o); }

private:
    Field field_;
    std::vector<std::uint8_t> v_;
};

/// Row-major matrix over F_q.
class Mat {
public:
    Mat(Field f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    Mat(Field f, std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint8_t value);
    std::span<const std::uint8_t> bytes() const { return a_; }

    bool operator==(const Mat& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> a_;
};

class RankDeficientError : public std::runtime_error {
public:
    RankDeficientError(std::size_t rank, std::size_t wanted)
        : std::runtime_error("matrix rank " + std::to_string(rank) +
                             " below required " + std::to_string(wanted)),
          rank_(rank) {}
    std::size_t rank() const { return rank_; }

private:
    std::size_t rank_;
};

/// Number of nonzero entries.
std::size_t weight(const Vec& v);
bool is_zero(const Vec& v);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(std::uint8_t alpha, const Vec& v);

/// y = H x^T; the syndrome of x when H is a parity-check matrix.
Vec mat_vec(const Mat& h, const Vec& x);

struct Systematized {
    Mat h;                            // (I_r | M)
    std::vector<std::size_t> col_perm; // output column j came from input column col_perm[j]
};

/// Row-reduce to systematic form (I_r | M), swapping columns when a pivot
/// column is singular and recording the swaps. Throws RankDeficientError
/// when rank < rows.
Systematized systematize(const Mat& a);

std::size_t rank(Mat a);

/// C x^T for the circulant C with C[i][j] = first_row[(j - i) mod r],
/// computed by index arithmetic without materializing C.
Vec circulant_mat_vec(const Vec& first_row, const Vec& x);

/// Dense circulant matrix from its first row (small instances, tests).
Mat circulant(const Vec& first_row);

} // namespace qsdi
