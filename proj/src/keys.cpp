#include "qsdi/keys.hpp"

#include <numeric>

namespace qsdi {

ParityCheck ParityCheck::systematic(Mat m_block) {
    if (m_block.rows() == 0 || m_block.cols() == 0)
        throw std::invalid_argument("empty systematic block");
    Vec none(m_block.field(), 0);
    return ParityCheck(MatrixKind::RandomSystematic, std::move(m_block), std::move(none));
}

ParityCheck ParityCheck::circulant_form(Vec first_row) {
    if (first_row.size() == 0) throw std::invalid_argument("empty circulant row");
    Mat none(first_row.field(), 0, 0);
    return ParityCheck(MatrixKind::DoubleCirculant, std::move(none), std::move(first_row));
}

const Field& ParityCheck::field() const {
    return kind_ == MatrixKind::RandomSystematic ? m_block_.field() : circ_row_.field();
}

std::size_t ParityCheck::r() const {
    return kind_ == MatrixKind::RandomSystematic ? m_block_.rows() : circ_row_.size();
}

std::size_t ParityCheck::k() const {
    return kind_ == MatrixKind::RandomSystematic ? m_block_.cols() : circ_row_.size();
}

const Mat& ParityCheck::m_block() const {
    if (kind_ != MatrixKind::RandomSystematic)
        throw std::logic_error("no dense block on a circulant parity check");
    return m_block_;
}

const Vec& ParityCheck::circ_row() const {
    if (kind_ != MatrixKind::DoubleCirculant)
        throw std::logic_error("no circulant row on a systematic parity check");
    return circ_row_;
}

Vec ParityCheck::syndrome(const Vec& x) const {
    const Field& f = field();
    if (x.field() != f) throw std::invalid_argument("mismatched field parameters");
    if (x.size() != n()) throw std::invalid_argument("matrix/vector dimension mismatch");

    const std::size_t rr = r();
    Vec right(f, k());
    for (std::size_t j = 0; j < k(); ++j) right.set(j, x[rr + j]);

    Vec y = kind_ == MatrixKind::RandomSystematic ? mat_vec(m_block_, right)
                                                  : circulant_mat_vec(circ_row_, right);
    for (std::size_t i = 0; i < rr; ++i) y.set(i, f.add(y[i], x[i]));
    return y;
}

Mat ParityCheck::dense() const {
    const Field& f = field();
    const std::size_t rr = r(), kk = k();
    Mat h(f, rr, rr + kk);
    for (std::size_t i = 0; i < rr; ++i) h.set(i, i, 1);
    if (kind_ == MatrixKind::RandomSystematic) {
        for (std::size_t i = 0; i < rr; ++i)
            for (std::size_t j = 0; j < kk; ++j) h.set(i, rr + j, m_block_.at(i, j));
    } else {
        Mat c = circulant(circ_row_);
        for (std::size_t i = 0; i < rr; ++i)
            for (std::size_t j = 0; j < kk; ++j) h.set(i, rr + j, c.at(i, j));
    }
    return h;
}

bool ParityCheck::operator==(const ParityCheck& o) const {
    if (kind_ != o.kind_) return false;
    return kind_ == MatrixKind::RandomSystematic ? m_block_ == o.m_block_
                                                 : circ_row_ == o.circ_row_;
}

Vec sample_fixed_weight(const Field& f, std::size_t n, std::size_t w, SeededStream& stream) {
    if (w > n) throw std::invalid_argument("weight exceeds length");
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < w; ++i) {
        const std::size_t j = i + stream.uniform(n - i);
        std::swap(idx[i], idx[j]);
    }
    Vec v(f, n);
    for (std::size_t i = 0; i < w; ++i) v.set(idx[i], stream.nonzero_field_element(f));
    return v;
}

KeyPair keygen(const SchemeParams& p, std::span<const std::uint8_t> seed) {
    const auto report = validate_params(p);
    if (!report.ok) throw std::invalid_argument("invalid parameters: " + report.errors.front());

    const Field& f = p.field;
    SeededStream stream(seed);

    auto draw_parity_check = [&]() -> ParityCheck {
        if (p.matrix_kind == MatrixKind::DoubleCirculant) {
            Vec row(f, p.r());
            for (std::size_t i = 0; i < p.r(); ++i) row.set(i, stream.field_element(f));
            return ParityCheck::circulant_form(std::move(row));
        }
        for (int attempt = 0; attempt < 16; ++attempt) {
            Mat a(f, p.r(), p.n);
            for (std::size_t i = 0; i < p.r(); ++i)
                for (std::size_t j = 0; j < p.n; ++j) a.set(i, j, stream.field_element(f));
            try {
                Systematized sys = systematize(a);
                Mat m(f, p.r(), p.k);
                for (std::size_t i = 0; i < p.r(); ++i)
                    for (std::size_t j = 0; j < p.k; ++j) m.set(i, j, sys.h.at(i, p.r() + j));
                return ParityCheck::systematic(std::move(m));
            } catch (const RankDeficientError&) {
                continue; // redraw from the advancing stream
            }
        }
        throw KeygenError("rank-deficient matrix after 16 redraws");
    };

    ParityCheck h = draw_parity_check();
    Vec s = sample_fixed_weight(f, p.n, p.secret_weight, stream);
    Vec y = h.syndrome(s);
    return KeyPair{PublicKey{p, std::move(h), std::move(y)}, PrivateKey{std::move(s)}};
}

Vec solve_syndrome(const ParityCheck& h, const Vec& y, SeededStream& stream) {
    const Field& f = h.field();
    if (y.size() != h.r()) throw std::invalid_argument("syndrome length mismatch");

    Vec right(f, h.k());
    for (std::size_t j = 0; j < h.k(); ++j) right.set(j, stream.field_element(f));
    Vec img = h.kind() == MatrixKind::RandomSystematic ? mat_vec(h.m_block(), right)
                                                       : circulant_mat_vec(h.circ_row(), right);
    Vec x(f, h.n());
    for (std::size_t i = 0; i < h.r(); ++i) x.set(i, f.sub(y[i], img[i]));
    for (std::size_t j = 0; j < h.k(); ++j) x.set(h.r() + j, right[j]);
    return x;
}

} // namespace qsdi
