#include "qsdi/transform.hpp"

#include <numeric>
#include <stdexcept>

namespace qsdi {

Vec apply_transform(const Transform& t, const Vec& v) {
    if (t.size() != v.size()) throw std::invalid_argument("transform/vector length mismatch");
    const Field& f = v.field();
    Vec out(f, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::uint32_t p = t.perm[i];
        out.set(i, f.mul(t.gamma[p], v[p]));
    }
    return out;
}

Vec invert_transform(const Transform& t, const Vec& w) {
    if (t.size() != w.size()) throw std::invalid_argument("transform/vector length mismatch");
    const Field& f = w.field();
    Vec out(f, w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const std::uint32_t p = t.perm[i];
        out.set(p, f.mul(f.inv(t.gamma[p]), w[i]));
    }
    return out;
}

Transform derive_transform(std::span<const std::uint8_t> sigma_seed,
                           std::span<const std::uint8_t> gamma_seed, std::size_t n,
                           const Field& f) {
    SeededStream sigma_stream(sigma_seed);
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i-- > 1;) {
        const std::size_t j = sigma_stream.uniform(i + 1);
        std::swap(perm[i], perm[j]);
    }

    SeededStream gamma_stream(gamma_seed);
    Vec gamma(f, n);
    for (std::size_t i = 0; i < n; ++i) gamma.set(i, gamma_stream.nonzero_field_element(f));

    return Transform{std::move(perm), std::move(gamma)};
}

bool is_valid_transform(const Transform& t) {
    const std::size_t n = t.perm.size();
    if (t.gamma.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::uint32_t p : t.perm) {
        if (p >= n || seen[p]) return false;
        seen[p] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (t.gamma[i] == 0) return false;
    return true;
}

} // namespace qsdi
