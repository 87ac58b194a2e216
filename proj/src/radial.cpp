#include "ionbound/radial.hpp"

#include "ionbound/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ionbound::radial {

BofS b_of_s(double s) {
    if (!(s > 1.0 && s <= 3.0)) throw domain_error("b_of_s: s must lie in (1,3]");
    // f(0) = 1-s < 0, f(1) = 2 > 0, so (0,1) brackets the root.
    auto f = [s](double t) { return std::pow(t, s) + s * t + 1.0 - s; };
    auto df = [s](double t) { return s * std::pow(t, s - 1.0) + s; };
    BofS out;
    out.s = s;
    out.t0 = num::bisect_newton(f, df, 0.0, 1.0, 1e-15);
    out.b = (s - 1.0) / (s * out.t0);
    out.beta_lower = 1.0 / out.b;
    return out;
}

double beta_closed_form(int s) {
    if (s == 2) return 2.0 * (std::sqrt(2.0) - 1.0);
    if (s == 3) {
        const double a = 1.0 + std::sqrt(2.0);
        return 1.5 * (std::cbrt(a) * std::cbrt(a) - 1.0) / std::cbrt(a);
    }
    throw domain_error("beta_closed_form: closed forms exist only for s = 2, 3");
}

RadialPowerLawMeasure make_measure(double p, double n) {
    if (!(n > 1.0)) throw domain_error("make_measure: outer radius must exceed 1");
    RadialPowerLawMeasure mu;
    mu.p = p;
    mu.n = n;
    mu.A = 1.0 / (4.0 * M_PI * num::power_integral(2.0 - p, 1.0, n));
    return mu;
}

double radial_moment(const RadialPowerLawMeasure& mu, double t) {
    return 4.0 * M_PI * mu.A * num::power_integral(2.0 - mu.p + t, 1.0, mu.n);
}

double radial_energy(const RadialPowerLawMeasure& mu, double s) {
    // With w(u) = 4 pi A u^{2-p} and symmetry in (u,v):
    //   I_s = ∫_1^n w(v) v^{-1} ∫_1^v (u^s + v^s) w(u) du dv
    //       = B^2 [ J(1-p, 2-p+s) + J(1-p+s, 2-p) ],  B = 4 pi A.
    const double B = 4.0 * M_PI * mu.A;
    const num::PowerLawIntegrals pli(mu.n);
    return B * B * (pli.J(1.0 - mu.p, 2.0 - mu.p + s) + pli.J(1.0 - mu.p + s, 2.0 - mu.p));
}

double radial_energy_quadrature(const RadialPowerLawMeasure& mu, double s, double rel_tol) {
    const double B = 4.0 * M_PI * mu.A;
    const double p = mu.p, n = mu.n;
    auto inner = [&](double v) {
        auto f = [&](double u) {
            return B * std::pow(u, 2.0 - p) * (std::pow(u, s) + std::pow(v, s)) /
                   (2.0 * std::max(u, v));
        };
        // split at the diagonal kink
        return num::adaptive_simpson(f, 1.0, v, rel_tol) + num::adaptive_simpson(f, v, n, rel_tol);
    };
    auto outer = [&](double v) { return B * std::pow(v, 2.0 - p) * inner(v); };
    const double result = num::adaptive_simpson(outer, 1.0, n, rel_tol);
    if (!std::isfinite(result)) throw quadrature_failure("radial_energy_quadrature: non-finite result");
    return result;
}

namespace {

double quotient(double s, double p, double n) {
    if (!(n > 1.0)) return std::numeric_limits<double>::infinity();
    const num::PowerLawIntegrals pli(n);
    const double B = 1.0 / pli.E(3.0 - p); // 4 pi A; E(z) = ∫ v^{z-1}
    const double mom = B * pli.E(2.0 - p + s);
    const double I = B * B * (pli.J(1.0 - p, 2.0 - p + s) + pli.J(1.0 - p + s, 2.0 - p));
    return I / mom;
}

struct Vertex {
    double p, ln_n, f;
};

// Two-parameter Nelder-Mead over (p, ln n).
Vertex nelder_mead(double s, double p0, double ln_n0, int iters) {
    std::array<Vertex, 3> simplex;
    auto eval = [&](double p, double ln_n) { return Vertex{p, ln_n, quotient(s, p, std::exp(ln_n))}; };
    simplex[0] = eval(p0, ln_n0);
    simplex[1] = eval(p0 + 0.05, ln_n0);
    simplex[2] = eval(p0, ln_n0 + 0.05);
    auto by_f = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
    for (int it = 0; it < iters; ++it) {
        std::sort(simplex.begin(), simplex.end(), by_f);
        const Vertex &best = simplex[0], &worst = simplex[2];
        const double cp = 0.5 * (simplex[0].p + simplex[1].p);
        const double cn = 0.5 * (simplex[0].ln_n + simplex[1].ln_n);
        Vertex refl = eval(cp + (cp - worst.p), cn + (cn - worst.ln_n));
        if (refl.f < best.f) {
            Vertex exp_ = eval(cp + 2.0 * (cp - worst.p), cn + 2.0 * (cn - worst.ln_n));
            simplex[2] = exp_.f < refl.f ? exp_ : refl;
        } else if (refl.f < simplex[1].f) {
            simplex[2] = refl;
        } else {
            Vertex con = eval(cp + 0.5 * (worst.p - cp), cn + 0.5 * (worst.ln_n - cn));
            if (con.f < worst.f) {
                simplex[2] = con;
            } else { // shrink toward best
                for (int j = 1; j < 3; ++j)
                    simplex[j] = eval(best.p + 0.5 * (simplex[j].p - best.p),
                                      best.ln_n + 0.5 * (simplex[j].ln_n - best.ln_n));
            }
        }
    }
    std::sort(simplex.begin(), simplex.end(), by_f);
    return simplex[0];
}

} // namespace

BetaUpperBound beta_upper_bound(double s, const BetaSearchOptions& opts, num::Exec exec) {
    if (!(s > 1.0 && s <= 3.0)) throw domain_error("beta_upper_bound: s must lie in (1,3]");
    if (opts.grid < 2) throw search_failure("beta_upper_bound: empty search grid");
    const int G = opts.grid;
    const double ln_lo = std::log(opts.n_min), ln_hi = std::log(opts.n_max);
    std::vector<double> vals(static_cast<std::size_t>(G) * G);
    auto cell = [&](int idx) {
        const int i = idx / G, j = idx % G;
        const double p = opts.p_min + (opts.p_max - opts.p_min) * i / (G - 1);
        const double ln_n = ln_lo + (ln_hi - ln_lo) * j / (G - 1);
        vals[idx] = quotient(s, p, std::exp(ln_n));
    };
    const int total = G * G;
    if (exec == num::Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int idx = 0; idx < total; ++idx) cell(idx);
    } else {
        for (int idx = 0; idx < total; ++idx) cell(idx);
    }
    // deterministic argmin: lexicographic (value, index)
    int best_idx = 0;
    for (int idx = 1; idx < total; ++idx)
        if (vals[idx] < vals[best_idx]) best_idx = idx;
    const int bi = best_idx / G, bj = best_idx % G;
    const double p0 = opts.p_min + (opts.p_max - opts.p_min) * bi / (G - 1);
    const double ln_n0 = ln_lo + (ln_hi - ln_lo) * bj / (G - 1);
    const Vertex v = nelder_mead(s, p0, ln_n0, opts.polish_iters);

    BetaUpperBound out;
    out.s = s;
    out.beta_up = v.f;
    out.b_num = 1.0 / v.f;
    out.p = v.p;
    out.n = std::exp(v.ln_n);
    // b_num <= 1/beta_s <= b(s); failure means the energy evaluation is broken
    if (out.b_num > b_of_s(s).b + 1e-9)
        throw violation_error("beta_upper_bound: numeric bound exceeds b(s)");
    return out;
}

std::vector<double> figure2_grid() {
    std::vector<double> s(30);
    for (int k = 0; k < 30; ++k) s[k] = 1.5 + k * (1.5 / 29.0);
    return s;
}

} // namespace ionbound::radial
