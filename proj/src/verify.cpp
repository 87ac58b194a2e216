#include "ionbound/verify.hpp"

#include "ionbound/errors.hpp"
#include "ionbound/multipole.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ionbound::verify {

namespace {

struct Sample {
    std::vector<double> params;
    double violation; // positive means the inequality failed by that much
};

// Evaluate `f` over a deterministic set of parameter tuples, track the worst
// violation and its witness; identical result for serial and parallel runs.
template <typename F>
InequalityReport scan(std::string name, std::string grid_desc,
                      const std::vector<std::vector<double>>& params, F f, num::Exec exec) {
    const long n = static_cast<long>(params.size());
    std::vector<double> viol(n);
    if (exec == num::Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i) viol[i] = f(params[i]);
    } else {
        for (long i = 0; i < n; ++i) viol[i] = f(params[i]);
    }
    long worst = 0;
    for (long i = 1; i < n; ++i)
        if (viol[i] > viol[worst]) worst = i;
    InequalityReport rep;
    rep.name = std::move(name);
    rep.grid = std::move(grid_desc);
    rep.n_points = n;
    rep.max_slack_violation = viol[worst];
    if (!rep.passed()) rep.witness = params[worst];
    return rep;
}

// lattice + seeded random interior points over a rectangle
std::vector<std::vector<double>> rect_samples(double x_lo, double x_hi, double y_lo, double y_hi,
                                              const GridOptions& opts) {
    std::vector<std::vector<double>> out;
    const int R = opts.resolution;
    out.reserve(static_cast<std::size_t>(R) * R + opts.random_samples);
    for (int i = 1; i <= R; ++i)
        for (int j = 0; j < R; ++j)
            out.push_back({x_lo + (x_hi - x_lo) * i / R, y_lo + (y_hi - y_lo) * j / (R - 1)});
    std::uint64_t state = opts.seed;
    auto uniform = [&state]() {
        state = num::splitmix64(state);
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    };
    for (long k = 0; k < opts.random_samples; ++k) {
        const double u = uniform(), v = uniform();
        out.push_back({x_lo + (x_hi - x_lo) * std::max(u, 1e-9), y_lo + (y_hi - y_lo) * v});
    }
    return out;
}

double G_of(double q, double r) { return (std::pow(1.0 + r, q) - std::pow(1.0 - r, q)) / (2.0 * r * q); }

} // namespace

InequalityReport check_power_chain(const GridOptions& opts, num::Exec exec) {
    auto params = rect_samples(0.0, 1.0, 1.0, 4.0, opts); // r in (0,1], p in [1,4]
    return scan("power-chain", "r in (0,1] x p in [1,4], lattice + random", params,
                [](const std::vector<double>& xy) {
                    const double r = xy[0], p = xy[1];
                    const double g_hi = G_of(p + 1.0, r);
                    const double g_mid = G_of(p, r);
                    const double v1 = g_mid - g_hi;                                       // G(p+1) >= G(p)
                    const double v2 = (1.0 - (p - 1.0) / 3.0 * r * r) * g_hi - g_mid;     // >= lower piece
                    return std::max(v1, v2);
                },
                exec);
}

InequalityReport check_prefactor_bound(const GridOptions& opts, num::Exec exec) {
    auto params = rect_samples(0.0, 1.0, 0.0, 4.0, opts); // r in (0,1), s in [0,4]
    return scan("prefactor", "r in (0,1) x s in [0,4], lattice + random", params,
                [](const std::vector<double>& xy) {
                    const double r = std::min(xy[0], 1.0 - 1e-12), s = xy[1];
                    const double num = std::pow(1.0 + r, s + 1.0) - std::pow(1.0 - r, s + 1.0);
                    const double den = std::pow(1.0 + r, s + 2.0) - std::pow(1.0 - r, s + 2.0);
                    const double lhs = (s + 2.0) / (s + 1.0) * num / den;
                    return (1.0 - s / 3.0 * r * r) - lhs;
                },
                exec);
}

InequalityReport check_taylor_s3(const GridOptions& opts, num::Exec exec) {
    auto params = rect_samples(0.0, 0.53, 0.0, 1.0, opts); // r in (0,0.53]; y unused
    return scan("taylor", "r in (0,0.53], lattice + random", params,
                [](const std::vector<double>& xy) {
                    const double r = xy[0];
                    const double r2 = r * r;
                    const double rational = 5.0 / (r2 * (r2 + 10.0) + 5.0);
                    const double quartic = 1.0 - 2.0 * r2 + 3.8 * r2 * r2;
                    double worst = rational - quartic;
                    // remainder of (1-2r^2+19/5 r^4)(r^2/5 + r^3/35 + 168 r^4/625)
                    const double rem = -82.0 / 625.0 * std::pow(r, 4) - 2.0 / 35.0 * std::pow(r, 5) +
                                       139.0 / 625.0 * std::pow(r, 6) + 19.0 / 175.0 * std::pow(r, 7) +
                                       3192.0 / 3125.0 * std::pow(r, 8);
                    worst = std::max(worst, rem);
                    if (r <= 0.5 && r > 0.0) {
                        const double lhs = 1.0 + rational * r2 * multipole::f_remainder(r, 3.0);
                        const double rhs = 1.0 + r2 / 5.0 + r2 * r / 35.0;
                        worst = std::max(worst, lhs - rhs);
                    }
                    return worst;
                },
                exec);
}

InequalityReport check_g_f_positivity(const GridOptions& opts, num::Exec exec) {
    auto params = rect_samples(0.0, 1.0, 2.0, 3.0, opts); // r in (0,1], s in [2,3]
    return scan("gf", "r in (0,1] x s in [2,3], lattice + random", params,
                [](const std::vector<double>& xy) {
                    const double r = xy[0], s = xy[1];
                    const double v1 = -multipole::g_convexity(r, s); // g >= 0
                    const double v2 = multipole::f_remainder(r, s) - multipole::f_remainder(r, 3.0);
                    return std::max(v1, v2);
                },
                exec);
}

InequalityReport check_positivity_lemma(long samples, std::uint64_t seed, num::Exec exec) {
    if (samples < 10000) throw domain_error("check_positivity_lemma: needs at least 1e4 samples");
    std::vector<std::vector<double>> params;
    params.reserve(samples);
    std::uint64_t state = seed;
    auto uniform = [&state]() {
        state = num::splitmix64(state);
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    };
    for (long i = 0; i < samples; ++i) {
        std::vector<double> tuple(9);
        for (int j = 0; j < 6; ++j) tuple[j] = 2.0 * uniform() - 1.0; // x1, x2 components
        tuple[6] = std::max(uniform(), 1e-6);                        // r in (0,1]
        tuple[7] = 2.0 + uniform();                                  // s in [2,3]
        tuple[8] = 0.0;
        params.push_back(std::move(tuple));
    }
    return scan("positivity", "random point pairs, r in (0,1], s in [2,3]", params,
                [](const std::vector<double>& t) {
                    const double x1[3] = {t[0], t[1], t[2]};
                    const double x2[3] = {t[3], t[4], t[5]};
                    const double r = t[6], s = t[7];
                    const double n1 = std::sqrt(x1[0] * x1[0] + x1[1] * x1[1] + x1[2] * x1[2]);
                    const double n2 = std::sqrt(x2[0] * x2[0] + x2[1] * x2[1] + x2[2] * x2[2]);
                    if (n1 < 1e-6 || n2 < 1e-6) return 0.0;
                    double d[3] = {x1[0] - x2[0], x1[1] - x2[1], x1[2] - x2[2]};
                    const double u = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
                    if (u < 1e-9) return 0.0;
                    auto gamma = [s](double uu, double vv) {
                        return std::pow(vv, s) * std::min(uu, vv) /
                               (3.0 * uu * std::max(uu, vv) * std::max(uu, vv));
                    };
                    const double dot1 = x1[0] * d[0] + x1[1] * d[1] + x1[2] * d[2];
                    const double dot2 = -(x2[0] * d[0] + x2[1] * d[1] + x2[2] * d[2]);
                    const double sum = gamma(u, r * n1) / n1 * dot1 + gamma(u, r * n2) / n2 * dot2;
                    // tilde variant differs by the factor 3; check both
                    return std::max(-sum, -3.0 * sum);
                },
                exec);
}

std::vector<InequalityReport> run_suite(const GridOptions& opts, num::Exec exec) {
    return {check_power_chain(opts, exec), check_prefactor_bound(opts, exec),
            check_taylor_s3(opts, exec), check_g_f_positivity(opts, exec),
            check_positivity_lemma(std::max(opts.random_samples, 10000L), opts.seed, exec)};
}

std::vector<InequalityReport> run_suite_named(const std::string& name, const GridOptions& opts,
                                              num::Exec exec) {
    if (name == "all") return run_suite(opts, exec);
    if (name == "power-chain") return {check_power_chain(opts, exec)};
    if (name == "prefactor") return {check_prefactor_bound(opts, exec)};
    if (name == "taylor") return {check_taylor_s3(opts, exec)};
    if (name == "gf") return {check_g_f_positivity(opts, exec)};
    if (name == "positivity")
        return {check_positivity_lemma(std::max(opts.random_samples, 10000L), opts.seed, exec)};
    throw domain_error("unknown verify suite: " + name);
}

} // namespace ionbound::verify
