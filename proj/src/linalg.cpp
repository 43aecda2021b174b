#include "qsdi/linalg.hpp"

#include <numeric>

namespace qsdi {

namespace {

void require_same_field(const Field& a, const Field& b) {
    if (a != b) throw std::invalid_argument("mismatched field parameters");
}

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("vector length mismatch");
}

} // namespace

Vec::Vec(Field f, std::vector<std::uint8_t> entries)
    : field_(std::move(f)), v_(std::move(entries)) {
    for (std::uint8_t e : v_)
        if (!field_.contains(e)) throw std::invalid_argument("entry out of field range");
}

Vec Vec::from_bytes(const Field& f, std::span<const std::uint8_t> bytes) {
    return Vec(f, std::vector<std::uint8_t>(bytes.begin(), bytes.end()));
}

void Vec::set(std::size_t i, std::uint8_t value) {
    if (!field_.contains(value)) throw std::invalid_argument("entry out of field range");
    v_[i] = value;
}

Mat::Mat(Field f, std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries)
    : field_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw std::invalid_argument("entry count mismatch");
    for (std::uint8_t e : a_)
        if (!field_.contains(e)) throw std::invalid_argument("entry out of field range");
}

void Mat::set(std::size_t i, std::size_t j, std::uint8_t value) {
    if (!field_.contains(value)) throw std::invalid_argument("entry out of field range");
    a_[i * cols_ + j] = value;
}

std::size_t weight(const Vec& v) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) ++w;
    return w;
}

bool is_zero(const Vec& v) { return weight(v) == 0; }

Vec add(const Vec& a, const Vec& b) {
    require_same_field(a.field(), b.field());
    require_same_size(a.size(), b.size());
    Vec out(a.field(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a.field().add(a[i], b[i]));
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    require_same_field(a.field(), b.field());
    require_same_size(a.size(), b.size());
    Vec out(a.field(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a.field().sub(a[i], b[i]));
    return out;
}

Vec scale(std::uint8_t alpha, const Vec& v) {
    Vec out(v.field(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.set(i, v.field().mul(alpha, v[i]));
    return out;
}

Vec mat_vec(const Mat& h, const Vec& x) {
    require_same_field(h.field(), x.field());
    if (h.cols() != x.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
    const Field& f = h.field();
    Vec y(f, h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::uint8_t acc = 0;
        for (std::size_t j = 0; j < h.cols(); ++j)
            acc = f.add(acc, f.mul(h.at(i, j), x[j]));
        y.set(i, acc);
    }
    return y;
}

Systematized systematize(const Mat& a) {
    const Field& f = a.field();
    const std::size_t r = a.rows(), n = a.cols();
    if (r > n) throw std::invalid_argument("more rows than columns");

    // Working copy as raw rows for in-place elimination.
    std::vector<std::vector<std::uint8_t>> w(r, std::vector<std::uint8_t>(n));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a.at(i, j);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    for (std::size_t i = 0; i < r; ++i) {
        // Locate a pivot at or right of column i, in rows >= i.
        std::size_t pc = n, pr = r;
        for (std::size_t j = i; j < n && pc == n; ++j)
            for (std::size_t t = i; t < r; ++t)
                if (w[t][j] != 0) {
                    pc = j;
                    pr = t;
                    break;
                }
        if (pc == n) throw RankDeficientError(i, r);
        if (pc != i) {
            for (std::size_t t = 0; t < r; ++t) std::swap(w[t][i], w[t][pc]);
            std::swap(perm[i], perm[pc]);
        }
        if (pr != i) std::swap(w[i], w[pr]);
        const std::uint8_t piv_inv = f.inv(w[i][i]);
        for (std::size_t j = 0; j < n; ++j) w[i][j] = f.mul(piv_inv, w[i][j]);
        for (std::size_t t = 0; t < r; ++t) {
            if (t == i || w[t][i] == 0) continue;
            const std::uint8_t c = w[t][i];
            for (std::size_t j = 0; j < n; ++j)
                w[t][j] = f.sub(w[t][j], f.mul(c, w[i][j]));
        }
    }

    Mat out(f, r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, w[i][j]);
    return Systematized{std::move(out), std::move(perm)};
}

std::size_t rank(Mat a) {
    const Field& f = a.field();
    const std::size_t r = a.rows(), n = a.cols();
    std::size_t rk = 0;
    for (std::size_t j = 0; j < n && rk < r; ++j) {
        std::size_t pr = r;
        for (std::size_t t = rk; t < r; ++t)
            if (a.at(t, j) != 0) {
                pr = t;
                break;
            }
        if (pr == r) continue;
        if (pr != rk)
            for (std::size_t c = 0; c < n; ++c) {
                std::uint8_t tmp = a.at(rk, c);
                a.set(rk, c, a.at(pr, c));
                a.set(pr, c, tmp);
            }
        const std::uint8_t piv_inv = f.inv(a.at(rk, j));
        for (std::size_t c = 0; c < n; ++c) a.set(rk, c, f.mul(piv_inv, a.at(rk, c)));
        for (std::size_t t = 0; t < r; ++t) {
            if (t == rk || a.at(t, j) == 0) continue;
            const std::uint8_t cf = a.at(t, j);
            for (std::size_t c = 0; c < n; ++c)
                a.set(t, c, f.sub(a.at(t, c), f.mul(cf, a.at(rk, c))));
        }
        ++rk;
    }
    return rk;
}

Vec circulant_mat_vec(const Vec& first_row, const Vec& x) {
    require_same_field(first_row.field(), x.field());
    require_same_size(first_row.size(), x.size());
    const Field& f = first_row.field();
    const std::size_t r = first_row.size();
    Vec y(f, r);
    for (std::size_t i = 0; i < r; ++i) {
        std::uint8_t acc = 0;
        for (std::size_t j = 0; j < r; ++j)
            acc = f.add(acc, f.mul(first_row[(j + r - i) % r], x[j]));
        y.set(i, acc);
    }
    return y;
}

Mat circulant(const Vec& first_row) {
    const std::size_t r = first_row.size();
    Mat c(first_row.field(), r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) c.set(i, j, first_row[(j + r - i) % r]);
    return c;
}

} // namespace qsdi
