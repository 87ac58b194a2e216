#pragma once

// Test-only oracles, independent of the library's primary computation paths.

#include "ionbound/numerics.hpp"
#include "ionbound/specfun.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

// (2l+1)/2 * Gauss-Legendre quadrature of t^k P_l(t): oracle for c_{k,l}.
inline double coeff_by_quadrature(int k, int l) {
    auto f = [&](double t) { return std::pow(t, k) * ionbound::specfun::legendre_eval(l, t); };
    return (2.0 * l + 1.0) / 2.0 * ionbound::num::gauss_integrate(f, -1.0, 1.0, 64);
}

// Product Gauss(cos theta) x trapezoid(phi) rule over the unit sphere,
// normalized so that averaging the constant 1 returns 1.
inline double sphere_average(const std::function<double(const std::array<double, 3>&)>& f,
                             int n_mu = 64, int n_phi = 128) {
    const auto& rule = ionbound::num::gauss_legendre(n_mu);
    double total = 0.0;
    for (int i = 0; i < n_mu; ++i) {
        const double mu = rule.nodes[i];
        const double st = std::sqrt(std::max(0.0, 1.0 - mu * mu));
        double ring = 0.0;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = 2.0 * M_PI * j / n_phi;
            ring += f({st * std::cos(phi), st * std::sin(phi), mu});
        }
        total += rule.weights[i] * ring / n_phi;
    }
    return 0.5 * total;
}

// Central finite differences of a scalar function of 3N coordinates.
inline std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> x,
    double rel_step = 1e-6) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h = rel_step * std::max(1.0, std::abs(x[i]));
        const double orig = x[i];
        x[i] = orig + h;
        const double fp = f(x);
        x[i] = orig - h;
        const double fm = f(x);
        x[i] = orig;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

// Integral-form oracle for the sharp functional-inequality constant:
// assembled from the three radial integrals of the optimizer profile
// (1 - r^p)^{3/2} via tanh-sinh quadrature.
inline double lieb_constant_integral(double p) {
    using ionbound::num::tanh_sinh;
    auto I1 = tanh_sinh([p](double r) { return r * r * std::pow(1.0 - std::pow(r, p), 1.5); }, 0.0, 1.0);
    auto I2 = tanh_sinh([p](double r) { return std::pow(r, 2.0 + p) * std::pow(1.0 - std::pow(r, p), 1.5); },
                        0.0, 1.0);
    auto I3 = tanh_sinh([p](double r) { return r * r * std::pow(1.0 - std::pow(r, p), 2.5); }, 0.0, 1.0);
    const double pi4 = 4.0 * M_PI;
    return std::pow(pi4 * I3, 0.5 * p) * (pi4 * I2) / std::pow(pi4 * I1, 1.0 + 5.0 * p / 6.0);
}

// Deterministic uniform stream for test data.
struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed) {}
    double uniform() {
        state = ionbound::num::splitmix64(state);
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

struct FigureRow {
    double a = 0.0, b = 0.0, c = 0.0;
};

// Parse the reference CSVs (comment lines allowed, one header row).
inline std::vector<FigureRow> load_reference_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open reference table: " + path);
    std::vector<FigureRow> rows;
    std::string line;
    bool header_skipped = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_skipped) {
            header_skipped = true;
            continue;
        }
        std::istringstream ls(line);
        FigureRow row;
        char comma;
        ls >> row.a >> comma >> row.b >> comma >> row.c;
        rows.push_back(row);
    }
    return rows;
}

inline std::string data_path(const std::string& name) {
    return std::string(IONBOUND_TEST_DATA_DIR) + "/" + name;
}

} // namespace testsupport
