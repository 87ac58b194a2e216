#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ionbound/errors.hpp"
#include "ionbound/radial.hpp"

#include "support.hpp"

#include <cmath>

using namespace ionbound;
using namespace ionbound::radial;

TEST_CASE("b_of_s closed-form anchors") {
    const auto b2 = b_of_s(2.0);
    CHECK(b2.t0 == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
    CHECK(b2.b > 1.2071);
    CHECK(b2.b < 1.2072);
    CHECK(b2.b == doctest::Approx(0.5 * (std::sqrt(2.0) + 1.0)).epsilon(1e-13));

    const auto b3 = b_of_s(3.0);
    CHECK(b3.b > 1.1184);
    CHECK(b3.b < 1.1185);

    // table anchor
    CHECK(b_of_s(2.017241).b == doctest::Approx(1.204455).epsilon(1e-5));

    CHECK_THROWS_AS(b_of_s(1.0), domain_error);
    CHECK_THROWS_AS(b_of_s(3.5), domain_error);
}

TEST_CASE("root residual and quotient identity across (1,3]") {
    for (int i = 1; i <= 200; ++i) {
        const double s = 1.0 + 2.0 * i / 200.0;
        const auto bs = b_of_s(s);
        const double residual = std::pow(bs.t0, s) + s * bs.t0 + 1.0 - s;
        CHECK(std::abs(residual) <= 1e-12);
        // the minimum value equals 1/b through both expressions
        const double quotient = (1.0 + std::pow(bs.t0, s)) / (1.0 + std::pow(bs.t0, s - 1.0));
        CHECK(quotient == doctest::Approx(1.0 / bs.b).epsilon(1e-12));
        // interior minimum: the quotient equals 1 at both ends t = 0, 1
        CHECK(quotient < 1.0);
    }
}

TEST_CASE("beta closed forms") {
    CHECK(beta_closed_form(2) == doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0)).epsilon(1e-15));
    CHECK(beta_closed_form(3) == doctest::Approx(0.8941048).epsilon(1e-6));
    CHECK(beta_closed_form(2) * b_of_s(2.0).b == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(beta_closed_form(3) * b_of_s(3.0).b == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(1.0 / beta_closed_form(3) > 1.1184);
    CHECK(1.0 / beta_closed_form(3) < 1.1185);
    CHECK_THROWS_AS(beta_closed_form(4), domain_error);
}

TEST_CASE("measure normalization and moments") {
    for (double p : {-1.0, 0.0, 2.0, 3.0, 4.5}) {
        for (double n : {1.5, 2.0, 10.0, 100.0}) {
            const auto mu = make_measure(p, n);
            CHECK(radial_moment(mu, 0.0) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
    SUBCASE("logarithmic normalization case") {
        const auto mu = make_measure(3.0, std::exp(1.0));
        CHECK(4.0 * M_PI * mu.A == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(radial_moment(mu, 1.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
    }
}

TEST_CASE("radial energy: closed form vs independent quadrature") {
    SUBCASE("tensor Simpson oracle at the pinned example") {
        // s=2, p=0, n=2 with a 2000^2-node Simpson grid
        const auto mu = make_measure(0.0, 2.0);
        const double closed = radial_energy(mu, 2.0);
        const int M = 2001;
        const double B = 4.0 * M_PI * mu.A;
        const double h = 1.0 / (M - 1);
        std::vector<double> w(M, 2.0);
        w[0] = w[M - 1] = 1.0;
        for (int i = 1; i < M - 1; i += 2) w[i] = 4.0;
        double total = 0.0;
        for (int i = 0; i < M; ++i) {
            const double u = 1.0 + i * h;
            double row = 0.0;
            for (int j = 0; j < M; ++j) {
                const double v = 1.0 + j * h;
                row += w[j] * B * std::pow(v, 2.0) * (u * u + v * v) / (2.0 * std::max(u, v));
            }
            total += w[i] * B * std::pow(u, 2.0) * row;
        }
        total *= (h / 3.0) * (h / 3.0);
        CHECK(closed == doctest::Approx(total).epsilon(2e-7));
    }
    SUBCASE("adaptive path agrees to 1e-8 including degenerate exponents") {
        for (auto [s, p, n] : {std::tuple{2.0, 0.0, 2.0}, {3.0, 4.0, 3.5}, {2.5, 3.75, 5.0},
                               {3.0, 3.0, 3.5}, {1.5, 3.25, 38.4}, {2.0, 3.5, 8.77}}) {
            const auto mu = make_measure(p, n);
            const double closed = radial_energy(mu, s);
            const double quad = radial_energy_quadrature(mu, s);
            CHECK(closed == doctest::Approx(quad).epsilon(1e-8));
        }
    }
    SUBCASE("point-like limit approaches the unit-shell value") {
        double prev_err = 1.0;
        for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
            const auto mu = make_measure(0.0, 1.0 + eps);
            const double err = std::abs(radial_energy(mu, 2.0) - 1.0);
            CHECK(err < prev_err);
            prev_err = err;
        }
        CHECK(prev_err < 1e-5);
    }
}

TEST_CASE("beta upper bound: sandwich and table anchors") {
    const auto up3 = beta_upper_bound(3.0);
    CHECK(up3.b_num == doctest::Approx(1.086183).epsilon(2e-3));
    CHECK(up3.b_num <= b_of_s(3.0).b);
    // roughly a 3% gap between the two bounds at s = 3
    CHECK((b_of_s(3.0).b - up3.b_num) / up3.b_num == doctest::Approx(0.03).epsilon(0.25));

    const auto up15 = beta_upper_bound(1.5);
    CHECK(up15.b_num == doctest::Approx(1.237325).epsilon(2e-3));
    CHECK(up15.b_num <= b_of_s(1.5).b);

    // beta_2 closed form caps the numeric bound
    const auto up2 = beta_upper_bound(2.0);
    CHECK(up2.b_num <= 1.0 / beta_closed_form(2) + 1e-9);
}

TEST_CASE("serial and parallel grid searches match exactly") {
    BetaSearchOptions opts;
    opts.grid = 32;
    const auto a = beta_upper_bound(2.3, opts, num::Exec::serial);
    const auto b = beta_upper_bound(2.3, opts, num::Exec::parallel);
    CHECK(a.beta_up == b.beta_up);
    CHECK(a.p == b.p);
    CHECK(a.n == b.n);
}

TEST_CASE("b(s) strictly decreasing on the table grid") {
    const auto grid = figure2_grid();
    REQUIRE(grid.size() == 30);
    double prev = b_of_s(grid[0]).b;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double cur = b_of_s(grid[i]).b;
        CHECK(cur < prev);
        prev = cur;
    }
}
