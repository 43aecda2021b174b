#include <doctest.h>

#include <cmath>

#include "qsdi/params.hpp"
#include "test_util.hpp"

using namespace qsdi;
using qsdi_test::toy_params;

TEST_SUITE("params") {

TEST_CASE("entropy endpoints") {
    for (unsigned q : {2u, 5u, 13u, 256u}) {
        CHECK(q_ary_entropy(0.0, q) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(q_ary_entropy(double(q - 1) / q, q) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)q_ary_entropy(-0.01, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)q_ary_entropy(0.9, 5), std::invalid_argument); // above 4/5
}

TEST_CASE("entropy at the param80 operating point") {
    CHECK(std::abs(q_ary_entropy(49.0 / 128.0, 256) - 0.503) <= 0.001);
}

TEST_CASE("gv relative distance") {
    CHECK(gv_relative_distance(0.999, 2) < 0.01);
    CHECK(std::abs(gv_relative_distance(0.5, 2) - 0.110) <= 0.001);
    CHECK(std::abs(128.0 * gv_relative_distance(0.5, 256) - 48.7) <= 0.05);
    CHECK_THROWS_AS((void)gv_relative_distance(0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)gv_relative_distance(1.0, 5), std::invalid_argument);
}

TEST_CASE("entropy and gv distance are mutual inverses") {
    for (unsigned q : {2u, 5u, 13u, 64u, 251u, 256u}) {
        for (double rate : {0.1, 0.25, 0.5, 0.75, 0.9, 0.999}) {
            const double d = gv_relative_distance(rate, q);
            CHECK(std::abs(q_ary_entropy(d, q) - (1.0 - rate)) <= 1e-6);
        }
    }
}

TEST_CASE("named parameter sets validate with published security") {
    for (const char* name : {"param80", "param128"}) {
        const auto p = named_params(name);
        REQUIRE(p.has_value());
        const auto rep = validate_params(*p);
        CHECK(rep.ok);
        CHECK(rep.on_gv_bound);
        CHECK(rep.kappa_status == KappaStatus::Published);
        CHECK(rep.warnings.empty());
    }
    CHECK(param80().kappa == 87);
    CHECK(param128().kappa == 128);
    CHECK(param80().rounds == 16);
    CHECK(!named_params("param96").has_value());
}

TEST_CASE("weights far from the gv bound warn") {
    SchemeParams p = toy_params(256, 128, 64, 120);
    const auto rep = validate_params(p);
    CHECK(rep.ok);
    CHECK(!rep.on_gv_bound);
    CHECK(!rep.warnings.empty());
}

TEST_CASE("custom sets are flagged as unverified") {
    const auto rep = validate_params(toy_params(5, 12, 6, 3));
    CHECK(rep.ok);
    CHECK(rep.kappa_status == KappaStatus::Unverified);
}

TEST_CASE("structural violations are hard errors") {
    CHECK(!validate_params(toy_params(5, 12, 12, 3)).ok);  // k = n
    CHECK(!validate_params(toy_params(5, 12, 6, 0)).ok);   // zero weight
    CHECK(!validate_params(toy_params(5, 12, 6, 13)).ok);  // w > n
    CHECK(!validate_params(toy_params(5, 12, 6, 3, 0)).ok); // zero rounds
    CHECK(!validate_params(toy_params(5, 12, 5, 3, 16, MatrixKind::DoubleCirculant)).ok);
    CHECK(validate_params(toy_params(5, 12, 6, 3, 16, MatrixKind::DoubleCirculant)).ok);
}

} // TEST_SUITE
