#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ionbound/verify.hpp"

#include <cmath>

using namespace ionbound;
using namespace ionbound::verify;

TEST_CASE("all default reports pass with zero witnesses") {
    for (const auto& rep : run_suite()) {
        INFO(rep.name, " violation ", rep.max_slack_violation);
        CHECK(rep.passed());
        CHECK(!rep.witness.has_value());
        CHECK(rep.n_points >= 10000);
    }
}

TEST_CASE("grid refinement does not flip outcomes") {
    GridOptions coarse, fine;
    coarse.resolution = 200;
    fine.resolution = 400;
    const auto a = run_suite(coarse);
    const auto b = run_suite(fine);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].passed() == b[i].passed());
}

TEST_CASE("power chain corner values") {
    // r = 1, p = 2: G(3) = 4/3 >= G(2) = 1 >= (1 - 1/3) * 4/3 = 8/9
    auto G = [](double q, double r) {
        return (std::pow(1.0 + r, q) - std::pow(1.0 - r, q)) / (2.0 * r * q);
    };
    CHECK(G(3.0, 1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(G(2.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(G(2.0, 1.0) >= (1.0 - 1.0 / 3.0) * G(3.0, 1.0));
    // r -> 0: every member tends to 1
    for (double q : {1.0, 2.0, 3.0, 4.5}) CHECK(G(q, 1e-8) == doctest::Approx(1.0).epsilon(1e-6));
    // p = 1 degenerates to equality between the first two members
    CHECK(G(1.0, 0.37) == doctest::Approx(G(2.0, 0.37)).epsilon(1e-12));
}

TEST_CASE("prefactor bound corner values") {
    // s = 0 reduces to equality
    const double r = 0.4;
    const double lhs = 2.0 * (std::pow(1 + r, 1.0) - std::pow(1 - r, 1.0)) /
                       (std::pow(1 + r, 2.0) - std::pow(1 - r, 2.0));
    CHECK(lhs == doctest::Approx(1.0).epsilon(1e-14));
    // r = 0.5, s = 3 holds with positive slack
    const double num = std::pow(1.5, 4.0) - std::pow(0.5, 4.0);
    const double den = std::pow(1.5, 5.0) - std::pow(0.5, 5.0);
    CHECK((5.0 / 4.0) * num / den > 1.0 - 0.25);
}

TEST_CASE("taylor chain spot values") {
    // the degree-8 remainder stays nonpositive through r = 0.53
    auto rem = [](double r) {
        return -82.0 / 625.0 * std::pow(r, 4) - 2.0 / 35.0 * std::pow(r, 5) +
               139.0 / 625.0 * std::pow(r, 6) + 19.0 / 175.0 * std::pow(r, 7) +
               3192.0 / 3125.0 * std::pow(r, 8);
    };
    CHECK(rem(0.5) < 0.0);
    CHECK(rem(0.53) < 0.0);
    CHECK(rem(0.56) > 0.0); // the margin genuinely ends just past 0.53
    CHECK(5.0 / (0.01 * 10.01 + 5.0) <= 1.0 - 2.0 * 0.01 + 3.8 * 1e-4 + 1e-12);
}

TEST_CASE("positivity lemma special cases") {
    // equal norms: exact cancellation to zero
    auto term = [](const double* xj, const double* xk, double r, double s) {
        const double nj = std::sqrt(xj[0] * xj[0] + xj[1] * xj[1] + xj[2] * xj[2]);
        double d[3] = {xj[0] - xk[0], xj[1] - xk[1], xj[2] - xk[2]};
        const double u = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
        const double v = r * nj;
        const double gamma = std::pow(v, s) * std::min(u, v) / (3.0 * u * std::max(u, v) * std::max(u, v));
        return gamma / nj * (xj[0] * d[0] + xj[1] * d[1] + xj[2] * d[2]);
    };
    const double x1[3] = {1.0, 0.3, -0.2}, x2n[3] = {-0.3, 1.0, 0.2};
    // |x1| == |x2n| by construction
    const double sum_eq = term(x1, x2n, 0.7, 2.5) + term(x2n, x1, 0.7, 2.5);
    CHECK(std::abs(sum_eq) < 1e-15);
    // collinear opposite points give a strictly positive sum
    const double a[3] = {2.0, 0.0, 0.0}, b[3] = {-1.0, 0.0, 0.0};
    CHECK(term(a, b, 0.5, 3.0) + term(b, a, 0.5, 3.0) > 0.0);

    const auto rep = check_positivity_lemma(20000, 99);
    CHECK(rep.passed());
}

TEST_CASE("serial and parallel suites produce identical reports") {
    GridOptions opts;
    opts.resolution = 100;
    const auto a = run_suite(opts, num::Exec::serial);
    const auto b = run_suite(opts, num::Exec::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].max_slack_violation == b[i].max_slack_violation);
        CHECK(a[i].n_points == b[i].n_points);
    }
}

TEST_CASE("suite selection by name") {
    CHECK(run_suite_named("power-chain").size() == 1);
    CHECK(run_suite_named("all").size() == 5);
    CHECK_THROWS(run_suite_named("bogus"));
}
