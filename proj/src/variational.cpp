#include "ionbound/variational.hpp"

#include "ionbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ionbound::variational {

const std::array<int, 11> kFigure1N = {2, 3, 4, 6, 8, 10, 12, 14, 16, 18, 20};
const std::array<double, 6> kFigure1S = {1.0, 1.25, 1.5, 2.0, 2.5, 3.0};

namespace {

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

double dist3(const Vec3& a, const Vec3& b) {
    const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

} // namespace

double min_pair_distance(const ParticleConfiguration& config) {
    double m = std::numeric_limits<double>::infinity();
    const int n = config.size();
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) m = std::min(m, dist3(config.points[j], config.points[k]));
    return m;
}

double min_norm(const ParticleConfiguration& config) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : config.points) m = std::min(m, norm3(p));
    return m;
}

namespace {

struct Evaluation {
    double value;
    std::vector<Vec3> gradient;
};

void check_geometry(const ParticleConfiguration& config, double s, double eps_geom) {
    if (config.size() < 2) throw domain_error("alpha objective: need at least two points");
    if (!(s >= 1.0)) throw domain_error("alpha objective: s must be >= 1");
    if (min_pair_distance(config) < eps_geom || min_norm(config) < eps_geom)
        throw degenerate_configuration_error("alpha objective: configuration below geometric floor");
}

// Objective and gradient in one pass; geometry assumed pre-checked.
Evaluation evaluate(const std::vector<Vec3>& pts, double s, bool want_gradient) {
    const int n = static_cast<int>(pts.size());
    std::vector<double> norms(n), ns(n);
    for (int i = 0; i < n; ++i) {
        norms[i] = norm3(pts[i]);
        ns[i] = std::pow(norms[i], s);
    }
    double numer = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) numer += (ns[j] + ns[k]) / dist3(pts[j], pts[k]);
    double denom_sum = 0.0;
    for (int i = 0; i < n; ++i) denom_sum += std::pow(norms[i], s - 1.0);
    const double denom = (n - 1) * denom_sum;
    Evaluation out;
    out.value = numer / denom;
    if (!want_gradient) return out;

    out.gradient.assign(n, Vec3{0.0, 0.0, 0.0});
    // dU/dx_m = Σ_{k≠m} [ s|x_m|^{s-2} x_m / d - (|x_m|^s+|x_k|^s)(x_m-x_k)/d^3 ]
    for (int m = 0; m < n; ++m) {
        Vec3 gU = {0.0, 0.0, 0.0};
        const double radial_w = s * std::pow(norms[m], s - 2.0);
        for (int k = 0; k < n; ++k) {
            if (k == m) continue;
            const double d = dist3(pts[m], pts[k]);
            const double w = (ns[m] + ns[k]) / (d * d * d);
            for (int c = 0; c < 3; ++c) {
                gU[c] += radial_w * pts[m][c] / d;
                gU[c] -= w * (pts[m][c] - pts[k][c]);
            }
        }
        // dD/dx_m = (N-1)(s-1)|x_m|^{s-3} x_m  (vanishes identically at s = 1)
        Vec3 gD = {0.0, 0.0, 0.0};
        if (s != 1.0) {
            const double wd = (n - 1) * (s - 1.0) * std::pow(norms[m], s - 3.0);
            for (int c = 0; c < 3; ++c) gD[c] = wd * pts[m][c];
        }
        for (int c = 0; c < 3; ++c) out.gradient[m][c] = (gU[c] - out.value * gD[c]) / denom;
    }
    return out;
}

bool feasible(const std::vector<Vec3>& pts, double eps_geom) {
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) {
        if (norm3(pts[i]) < eps_geom) return false;
        for (int j = i + 1; j < n; ++j)
            if (dist3(pts[i], pts[j]) < eps_geom) return false;
    }
    return true;
}

// Deterministic uniform/gaussian draws from a splitmix64 stream.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    double uniform() { // in [0,1)
        state = num::splitmix64(state);
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }
    double gaussian() {
        double u1 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
};

std::vector<Vec3> random_annulus_points(int n, Rng& rng, double r_min = 0.3, double r_max = 1.0) {
    std::vector<Vec3> pts(n);
    const double lo3 = r_min * r_min * r_min, hi3 = r_max * r_max * r_max;
    for (auto& p : pts) {
        const double r = std::cbrt(lo3 + rng.uniform() * (hi3 - lo3));
        Vec3 d;
        double nn = 0.0;
        do {
            d = {rng.gaussian(), rng.gaussian(), rng.gaussian()};
            nn = norm3(d);
        } while (nn < 1e-12);
        for (int c = 0; c < 3; ++c) p[c] = r * d[c] / nn;
    }
    return pts;
}

struct StartResult {
    double value = std::numeric_limits<double>::infinity();
    double grad_norm = std::numeric_limits<double>::infinity();
    bool converged = false;
    bool stalled = false;
    std::vector<Vec3> points;
};

double grad_norm_of(const std::vector<Vec3>& g) {
    double s = 0.0;
    for (const auto& v : g)
        for (double c : v) s += c * c;
    return std::sqrt(s);
}

// Dense BFGS with Armijo backtracking, degeneracy-floor step rejection and
// max-norm gauge renormalization between line searches.
StartResult bfgs_start(int n, double s, const MinimizeOptions& opts, std::uint64_t stream_seed) {
    const int dim = 3 * n;
    Rng rng(stream_seed);
    std::vector<Vec3> x = random_annulus_points(n, rng);

    auto renorm = [&](std::vector<Vec3>& pts) {
        double mx = 0.0;
        for (const auto& p : pts) mx = std::max(mx, norm3(p));
        const double lam = mx / opts.radius_gauge;
        for (auto& p : pts)
            for (double& c : p) c /= lam;
        return lam;
    };
    renorm(x);

    Evaluation ev = evaluate(x, s, true);
    std::vector<double> H(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) H[static_cast<std::size_t>(i) * dim + i] = 1.0;

    auto flat = [&](const std::vector<Vec3>& pts, int i) { return pts[i / 3][i % 3]; };

    StartResult res;
    std::vector<double> p(dim), g(dim), g_new(dim), sv(dim), yv(dim);
    for (int i = 0; i < dim; ++i) g[i] = ev.gradient[i / 3][i % 3];

    int it = 0;
    for (; it < opts.max_iter; ++it) {
        const double gn = grad_norm_of(ev.gradient);
        if (gn <= opts.tol_grad) {
            res.converged = true;
            break;
        }
        // p = -H g
        double pg = 0.0;
        for (int i = 0; i < dim; ++i) {
            double acc = 0.0;
            const double* row = &H[static_cast<std::size_t>(i) * dim];
            for (int j = 0; j < dim; ++j) acc += row[j] * g[j];
            p[i] = -acc;
            pg += p[i] * g[i];
        }
        if (pg >= 0.0) { // reset on loss of descent direction
            for (int i = 0; i < dim; ++i) {
                double* row = &H[static_cast<std::size_t>(i) * dim];
                for (int j = 0; j < dim; ++j) row[j] = (i == j) ? 1.0 : 0.0;
                p[i] = -g[i];
            }
            pg = 0.0;
            for (int i = 0; i < dim; ++i) pg += p[i] * g[i];
        }

        double t = 1.0;
        bool accepted = false;
        std::vector<Vec3> xn = x;
        Evaluation evn;
        for (int ls = 0; ls < 60; ++ls) {
            for (int i = 0; i < dim; ++i) xn[i / 3][i % 3] = flat(x, i) + t * p[i];
            if (feasible(xn, opts.eps_geom)) {
                evn = evaluate(xn, s, true);
                if (evn.value <= ev.value + 1e-4 * t * pg) {
                    accepted = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if (!accepted) {
            res.stalled = true;
            break;
        }

        for (int i = 0; i < dim; ++i) {
            sv[i] = xn[i / 3][i % 3] - flat(x, i);
            g_new[i] = evn.gradient[i / 3][i % 3];
            yv[i] = g_new[i] - g[i];
        }
        double sy = 0.0, ss = 0.0, yy = 0.0;
        for (int i = 0; i < dim; ++i) {
            sy += sv[i] * yv[i];
            ss += sv[i] * sv[i];
            yy += yv[i] * yv[i];
        }
        if (sy > 1e-12 * std::sqrt(ss * yy)) {
            // H <- (I - r s y^T) H (I - r y s^T) + r s s^T
            const double r = 1.0 / sy;
            std::vector<double> Hy(dim, 0.0);
            for (int i = 0; i < dim; ++i) {
                double acc = 0.0;
                const double* row = &H[static_cast<std::size_t>(i) * dim];
                for (int j = 0; j < dim; ++j) acc += row[j] * yv[j];
                Hy[i] = acc;
            }
            double yHy = 0.0;
            for (int i = 0; i < dim; ++i) yHy += yv[i] * Hy[i];
            for (int i = 0; i < dim; ++i) {
                double* row = &H[static_cast<std::size_t>(i) * dim];
                for (int j = 0; j < dim; ++j)
                    row[j] += -r * (Hy[i] * sv[j] + sv[i] * Hy[j]) +
                              r * (1.0 + r * yHy) * sv[i] * sv[j];
            }
        }
        x = std::move(xn);
        ev = std::move(evn);
        g = g_new;

        // gauge: keep max_k |x_k| pinned; gradients and H rescale covariantly
        double mx = 0.0;
        for (const auto& pt : x) mx = std::max(mx, norm3(pt));
        const double lam = mx / opts.radius_gauge;
        if (lam < 0.5 || lam > 2.0) {
            for (auto& pt : x)
                for (double& c : pt) c /= lam;
            ev = evaluate(x, s, true);
            for (int i = 0; i < dim; ++i) g[i] = ev.gradient[i / 3][i % 3];
            const double il2 = 1.0 / (lam * lam);
            for (double& h : H) h *= il2;
        }
    }
    if (it == opts.max_iter) res.stalled = true;

    res.value = ev.value;
    res.grad_norm = grad_norm_of(ev.gradient);
    res.points = std::move(x);
    return res;
}

} // namespace

double alpha_objective(const ParticleConfiguration& config, double s, double eps_geom) {
    check_geometry(config, s, eps_geom);
    return evaluate(config.points, s, false).value;
}

std::vector<Vec3> alpha_gradient(const ParticleConfiguration& config, double s, double eps_geom) {
    check_geometry(config, s, eps_geom);
    return evaluate(config.points, s, true).gradient;
}

AlphaResult minimize_alpha(int n, double s, const MinimizeOptions& opts, num::Exec exec) {
    if (n < 2) throw domain_error("minimize_alpha: need at least two particles");
    if (!(s >= 1.0)) throw domain_error("minimize_alpha: s must be >= 1");
    const int n_starts = opts.n_starts > 0 ? opts.n_starts : (n <= 10 ? 64 : 256);

    std::vector<StartResult> results(n_starts);
    auto run = [&](int i) {
        results[i] = bfgs_start(n, s, opts, num::substream_seed(opts.seed, static_cast<std::uint64_t>(i)));
    };
    if (exec == num::Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n_starts; ++i) run(i);
    } else {
        for (int i = 0; i < n_starts; ++i) run(i);
    }

    AlphaResult out;
    out.n_particles = n;
    out.s = s;
    out.n_starts = n_starts;
    out.seed = opts.seed;
    int best = -1;
    for (int i = 0; i < n_starts; ++i) {
        const auto& r = results[i];
        out.n_converged += r.converged ? 1 : 0;
        out.n_stalled += r.stalled && !r.converged ? 1 : 0;
        if (best < 0 || r.value < results[best].value ||
            (r.value == results[best].value && r.grad_norm < results[best].grad_norm))
            best = i;
    }
    if (out.n_converged == 0 && opts.require_convergence)
        throw no_convergence_error("minimize_alpha: no start reached the gradient tolerance");

    const auto& b = results[best];
    out.value = b.value;
    out.best_gradient_norm = b.grad_norm;
    out.minimizer.points = b.points;
    int near_best = 0;
    for (const auto& r : results)
        if (r.value <= b.value + 1e-3) ++near_best;
    out.corroborated = near_best >= 2;
    return out;
}

} // namespace ionbound::variational
