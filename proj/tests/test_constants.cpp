#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ionbound/constants.hpp"
#include "ionbound/errors.hpp"
#include "ionbound/numerics.hpp"

#include "support.hpp"

#include <cmath>

using namespace ionbound;
using namespace ionbound::constants;
using testsupport::lieb_constant_integral;

TEST_CASE("Lieb constant anchors") {
    const double C1_inv = 1.0 / lieb_constant(1.0);
    CHECK(C1_inv > 2.340);
    CHECK(C1_inv < 2.342);
    // closed radical form at p = 1
    const double C1_closed = std::pow(3.0, 5.0 / 3.0) * std::pow(5.0, 5.0 / 6.0) *
                             std::cbrt(7.0 / M_PI) / (22.0 * std::sqrt(11.0));
    CHECK(lieb_constant(1.0) == doctest::Approx(C1_closed).epsilon(1e-13));

    const double C2_ir = lieb_inv_root(2.0);
    CHECK(C2_ir == doctest::Approx(4.0 * std::pow(M_PI, 2.0 / 3.0) / std::sqrt(15.0)).epsilon(1e-13));
    CHECK(C2_ir > 2.215);
    CHECK(C2_ir < 2.216);

    CHECK_THROWS_AS(lieb_constant(0.5), domain_error);
    CHECK_THROWS_AS(lieb_constant(2.5), domain_error);
}

TEST_CASE("Gamma form vs integral form over [1,2]") {
    for (int i = 0; i < 20; ++i) {
        const double p = 1.0 + i / 19.0;
        const double closed = lieb_constant(p);
        const double integral = lieb_constant_integral(p);
        CHECK(std::abs(closed - integral) / closed < 1e-9);
    }
}

TEST_CASE("p -> C_p^{-1/p} decreasing") {
    double prev = lieb_inv_root(1.0);
    for (int i = 1; i < 20; ++i) {
        const double cur = lieb_inv_root(1.0 + i / 19.0);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("kappa, K3 and the composite constants") {
    CHECK(kappa() == doctest::Approx(0.7156).epsilon(7e-4));
    CHECK(kinetic_K3() > 7.095);
    CHECK(kinetic_K3() < 7.097);

    const double lambda = (3.0 / 8.0) / lieb_constant(1.0) * kappa();
    CHECK(std::abs(lambda - 0.6284) < 1e-3);
    CHECK(lambda == doctest::Approx(kinetic_correction_coeff(2.0)).epsilon(1e-14));

    const double c = lieb_inv_root(2.0) * kappa();
    CHECK(c < 1.5855);
    CHECK(c == doctest::Approx(kinetic_correction_coeff(3.0)).epsilon(1e-14));

    // consistency: kappa^2 = 2^{5/3} A_hyd / K3
    CHECK(kappa() * kappa() ==
          doctest::Approx(std::pow(2.0, 5.0 / 3.0) * ground_state_coeff(2) / kinetic_K3())
              .epsilon(1e-12));
}

TEST_CASE("ground state coefficient") {
    CHECK(ground_state_coeff(2) == doctest::Approx(std::cbrt(1.5)).epsilon(1e-12));
    CHECK(ground_state_coeff(1) == doctest::Approx(std::cbrt(3.0) / 2.0).epsilon(1e-14));
    double prev = 0.0;
    for (int u = 1; u <= 6; ++u) {
        CHECK(ground_state_coeff(u) > prev);
        prev = ground_state_coeff(u);
    }
    CHECK_THROWS_AS(ground_state_coeff(0), domain_error);
}

TEST_CASE("kinetic correction coefficient across s") {
    double prev = kinetic_correction_coeff(2.0);
    for (double s : {2.25, 2.5, 2.75, 3.0}) {
        const double cur = kinetic_correction_coeff(s);
        CHECK(cur > prev); // monotone between the two anchors
        prev = cur;
    }
    CHECK_THROWS_AS(kinetic_correction_coeff(1.5), domain_error);
}

TEST_CASE("report invariants") {
    const auto rep = constants_report(2.0, 2);
    CHECK(rep.C_p_inv_root > 2.215);
    CHECK(rep.C_p_inv_root < 2.216);
    CHECK(rep.c_composite < 1.5855);
    CHECK(rep.K3 > 7.095);
    CHECK(rep.K3 < 7.097);
    CHECK(rep.A_hyd == doctest::Approx(std::cbrt(1.5)).epsilon(1e-12));
}
