#include "doctest.h"

#include "blowup/geometry/metric.hpp"
#include "blowup/profile/profile.hpp"
#include "oracle_values.hpp"

#include <cmath>
#include <random>

using namespace blowup;
using geometry::sectional_curvatures;

TEST_CASE("metric family") {
    auto m = geometry::metric_family(9);
    CHECK(m.e == 1);
    CHECK(m.g_squared[0].is_zero());
    CHECK(m.g_squared[2] == exact::Rational(1));
    CHECK(m.g_squared[6] == exact::Rational(-37));
    CHECK(geometry::metric_g(9, 0.0) == 0.0);
    CHECK(geometry::metric_g(9, 1e-7) / 1e-7 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(geometry::metric_g(8, 0.1) == doctest::Approx(0.1 * std::sqrt(1 + 0.07 - 1.4e-3)).epsilon(1e-15));
    CHECK_THROWS_AS(geometry::metric_g(9, 1.0), std::domain_error);
}

TEST_CASE("metric is odd") {
    for (int d : {8, 9, 20})
        for (double u : {0.01, 0.1, 0.2}) CHECK(geometry::metric_g(d, -u) == -geometry::metric_g(d, u));
}

TEST_CASE("curvatures at the origin") {
    auto k = sectional_curvatures(9, 0.0);
    CHECK(k.type1 == doctest::Approx(-21.0).epsilon(1e-12));
    CHECK(k.type2 == doctest::Approx(-21.0).epsilon(1e-12));
    auto k_small = sectional_curvatures(9, 1e-6);
    CHECK(k_small.type1 == doctest::Approx(-21.0).epsilon(1e-8));
    CHECK(k_small.type2 == doctest::Approx(-21.0).epsilon(1e-8));
}

TEST_CASE("curvatures match symbolic differentiation") {
    const double K1_9[] = {oracle::K1_9_0, oracle::K1_9_1, oracle::K1_9_2};
    const double K2_9[] = {oracle::K2_9_0, oracle::K2_9_1, oracle::K2_9_2};
    const double K1_12[] = {oracle::K1_12_0, oracle::K1_12_1, oracle::K1_12_2};
    const double K2_12[] = {oracle::K2_12_0, oracle::K2_12_1, oracle::K2_12_2};
    for (int j = 0; j < 3; ++j) {
        auto a = sectional_curvatures(9, oracle::K_u[j]);
        CHECK(a.type1 == doctest::Approx(K1_9[j]).epsilon(1e-12));
        CHECK(a.type2 == doctest::Approx(K2_9[j]).epsilon(1e-12));
        auto b = sectional_curvatures(12, oracle::K_u[j]);
        CHECK(b.type1 == doctest::Approx(K1_12[j]).epsilon(1e-12));
        CHECK(b.type2 == doctest::Approx(K2_12[j]).epsilon(1e-12));
    }
}

TEST_CASE("numerator polynomial agrees with the metric") {
    CHECK(geometry::N_poly() == geometry::N_from_metric());
    // P^2 Q - R^2 = 2 c^2 S
    using exact::RatPoly;
    RatPoly c = geometry::c_poly();
    RatPoly lhs = geometry::P_poly() * geometry::P_poly() * geometry::Q_poly() - geometry::R_poly() * geometry::R_poly();
    CHECK(lhs == RatPoly::constant(exact::Rational(2), "e") * c * c * geometry::S_poly());
}

TEST_CASE("curvature certificate for all d >= 8") {
    auto cert = geometry::certify_negative_curvature_all();
    CHECK(cert.pass());
    CHECK(cert.steps().size() > 10);
    for (int d : {8, 9, 10, 57}) CHECK(geometry::certify_negative_curvature(d).pass());
}

TEST_CASE("curvature certificate fails for d = 7 at the profile precondition") {
    auto cert = geometry::certify_negative_curvature(7);
    CHECK_FALSE(cert.pass());
    REQUIRE(cert.first_failure() != nullptr);
    CHECK(cert.first_failure()->desc.find("b > 1") != std::string::npos);
}

TEST_CASE("sampled curvatures are negative up to phi0(1)") {
    for (int d = 8; d <= 100; ++d) {
        const double edge = profile::phi0(profile::profile_params(d), 1.0);
        bool ok = true;
        for (int i = 0; i <= 200; ++i) {
            auto k = sectional_curvatures(d, edge * i / 200.0);
            ok = ok && k.type1 < 0 && k.type2 < 0;
        }
        CHECK_MESSAGE(ok, "d = " << d);
    }
}

TEST_CASE("epsilon margin") {
    const double e9 = geometry::epsilon_margin(9);
    CHECK(e9 > 0.0);
    CHECK(e9 == doctest::Approx(oracle::eps_margin_9).epsilon(1e-6));
    CHECK(geometry::epsilon_margin(8) > 0.0);
    for (int d : {8, 9, 30}) {
        const double edge = profile::phi0(profile::profile_params(d), 1.0);
        auto k = sectional_curvatures(d, edge + geometry::epsilon_margin(d) / 2);
        CHECK(k.type1 < 0);
        CHECK(k.type2 < 0);
    }
    CHECK_THROWS(geometry::epsilon_margin(7));
}
