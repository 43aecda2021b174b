#include "qsdi/params.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdi {

SchemeParams param80(MatrixKind kind) {
    SchemeParams p{Field::gf256(), 128, 64, 49, 16, 87, 128, 128, 128, kind, "param80"};
    return p;
}

SchemeParams param128(MatrixKind kind) {
    SchemeParams p{Field::gf256(), 208, 104, 78, 16, 128, 128, 128, 128, kind, "param128"};
    return p;
}

std::optional<SchemeParams> named_params(std::string_view name, MatrixKind kind) {
    if (name == "param80") return param80(kind);
    if (name == "param128") return param128(kind);
    return std::nullopt;
}

std::optional<PublishedFigures> published_figures(std::string_view name) {
    if (name == "param80") return PublishedFigures{33792, 30848, 12.1, 11.3};
    if (name == "param128") return PublishedFigures{88192, 46224, 12.9, 11.5};
    return std::nullopt;
}

double q_ary_entropy(double x, unsigned q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    const double hi = double(q - 1) / double(q);
    if (x < 0.0 || x > hi) throw std::invalid_argument("entropy argument outside [0, (q-1)/q]");
    const double lq = std::log(double(q));
    double h = x * std::log(double(q - 1)) / lq;
    if (x > 0.0) h -= x * std::log(x) / lq;
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lq;
    return h;
}

double gv_relative_distance(double rate, unsigned q) {
    if (rate <= 0.0 || rate >= 1.0) throw std::invalid_argument("rate must be in (0, 1)");
    const double target = 1.0 - rate;
    double lo = 0.0, hi = double(q - 1) / double(q);
    // H_q is increasing on [0, (q-1)/q] from 0 to 1, so bisection applies.
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (q_ary_entropy(mid, q) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ValidationReport validate_params(const SchemeParams& p) {
    ValidationReport rep;
    const auto err = [&](std::string m) {
        rep.ok = false;
        rep.errors.push_back(std::move(m));
    };

    if (p.n == 0 || p.k == 0 || p.k >= p.n) err("need 0 < k < n");
    if (p.n > 256) err("n above 256 is unsupported");
    if (p.secret_weight == 0 || p.secret_weight > p.n) err("need 0 < w <= n");
    if (p.rounds == 0) err("need at least one round");
    if (p.matrix_kind == MatrixKind::DoubleCirculant && (p.n != 2 * p.k))
        err("double-circulant form requires n = 2k");
    if (p.commit_bits % 8 != 0 || p.commit_bits == 0 || p.commit_bits > 256)
        err("commitment length must be a positive multiple of 8 up to 256 bits");
    if (p.sigma_seed_bits % 8 != 0 || p.sigma_seed_bits == 0)
        err("permutation seed length must be a positive multiple of 8");
    if (p.gamma_seed_bits % 8 != 0 || p.gamma_seed_bits == 0)
        err("scaling seed length must be a positive multiple of 8");
    if (!rep.ok) return rep;

    const double rate = double(p.k) / double(p.n);
    rep.gv_weight = double(p.n) * gv_relative_distance(rate, p.q());
    rep.on_gv_bound = std::abs(double(p.secret_weight) - rep.gv_weight) <= 2.0;
    if (!rep.on_gv_bound)
        rep.warnings.push_back("secret weight is off the Gilbert-Varshamov weight " +
                               std::to_string(rep.gv_weight));

    // Attack work factors come from the published parameter sets; they are
    // never computed here.
    const auto named = named_params(p.name, p.matrix_kind);
    if (named && named->field == p.field && named->n == p.n && named->k == p.k &&
        named->secret_weight == p.secret_weight && named->kappa == p.kappa) {
        rep.kappa_status = KappaStatus::Published;
    } else {
        rep.kappa_status = KappaStatus::Unverified;
        rep.warnings.push_back("security exponent asserted, not computed (unpublished parameter set)");
    }
    return rep;
}

} // namespace qsdi
