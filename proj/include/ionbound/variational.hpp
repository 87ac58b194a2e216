#pragma once

#include "ionbound/numerics.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace ionbound::variational {

using Vec3 = std::array<double, 3>;

// N distinct nonzero points in 3-space (the admissible set for the quotient).
struct ParticleConfiguration {
    std::vector<Vec3> points;

    int size() const { return static_cast<int>(points.size()); }
};

// Smallest pairwise distance and smallest norm; degeneracy guards.
double min_pair_distance(const ParticleConfiguration& config);
double min_norm(const ParticleConfiguration& config);

// F = [Σ_{j≠k} (|x_j|^s + |x_k|^s)/|x_j - x_k|] / [2(N-1) Σ_k |x_k|^{s-1}].
double alpha_objective(const ParticleConfiguration& config, double s, double eps_geom = 1e-12);

// Analytic gradient of F with respect to every point.
std::vector<Vec3> alpha_gradient(const ParticleConfiguration& config, double s,
                                 double eps_geom = 1e-12);

struct MinimizeOptions {
    int n_starts = 0; // 0: default budget (64 for N<=10, else 256)
    std::uint64_t seed = 12345;
    double tol_grad = 1e-8;
    int max_iter = 2000;
    double radius_gauge = 1.0; // iterates renormalized to max_k |x_k| = radius_gauge
    double eps_geom = 1e-12;
    bool require_convergence = true;
};

struct AlphaResult {
    int n_particles = 0;
    double s = 0.0;
    double value = 0.0; // best found over all starts (upper estimate of alpha_{N,s})
    ParticleConfiguration minimizer;
    int n_starts = 0;
    int n_converged = 0;             // starts reaching the gradient tolerance
    int n_stalled = 0;               // starts stopped at the degeneracy floor
    double best_gradient_norm = 0.0; // at the reported minimizer
    std::uint64_t seed = 0;
    bool corroborated = false; // a second start landed within 1e-3 of the best
};

// Multi-start quasi-Newton minimization; deterministic under fixed seed and
// independent of thread scheduling.
AlphaResult minimize_alpha(int n, double s, const MinimizeOptions& opts = {},
                           num::Exec exec = num::Exec::parallel);

// Figure grid: N in {2,3,4,6,...,20} x s in {1, 1.25, 1.5, 2, 2.5, 3}.
extern const std::array<int, 11> kFigure1N;
extern const std::array<double, 6> kFigure1S;

} // namespace ionbound::variational
