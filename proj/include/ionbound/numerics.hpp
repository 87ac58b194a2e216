#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ionbound::num {

// Execution policy for data-parallel kernels. Every parallel kernel has a
// serial twin producing bit-identical results; tests compare the two.
enum class Exec { serial, parallel };

// ---------------------------------------------------------------------------
// Gauss-Legendre quadrature on [-1,1].
// ---------------------------------------------------------------------------
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes/weights by Newton iteration on the Legendre recurrence.
const GaussRule& gauss_legendre(int n);

// ∫_a^b f dx with an n-point rule mapped to [a,b].
double gauss_integrate(const std::function<double(double)>& f, double a, double b, int n = 64);

// Adaptive Simpson with absolute/relative tolerance control.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-12, int max_depth = 48);

// tanh-sinh (double exponential) rule on (a,b); handles algebraic endpoint
// singularities, used by the integral-form oracles.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13);

// ---------------------------------------------------------------------------
// Deterministic reductions.
// ---------------------------------------------------------------------------

// Pairwise summation over a fixed binary tree; independent of thread count.
double pairwise_sum(std::span<const double> xs);

// ---------------------------------------------------------------------------
// Root finding: bisection to bracket width `width`, then one Newton step.
// Caller guarantees f(lo) and f(hi) have opposite signs.
// ---------------------------------------------------------------------------
double bisect_newton(const std::function<double(double)>& f,
                     const std::function<double(double)>& df,
                     double lo, double hi, double width = 1e-15);

// ---------------------------------------------------------------------------
// Stable power-law integrals on [1, n].
//
//   E(z)  = ∫_1^n v^{z-1} dv              (entire in z; E(0) = ln n)
//   G_k(z)= ∫_1^n v^{z-1} ln^k v dv = E^(k)(z)
//
// and the nested antiderivative
//
//   J(c,m) = ∫_1^n v^c [ ∫_1^v u^m du ] dv
//
// evaluated as a divided difference of E, with a symmetric Taylor fallback
// when the two exponents nearly coincide (the log cases m = -1, c = -1 and
// c+m+1 = -1 are interior points of this parametrization, not special cases).
// ---------------------------------------------------------------------------
struct PowerLawIntegrals {
    double log_n; // ln n, n > 1

    explicit PowerLawIntegrals(double n);

    double E(double z) const;                       // ∫_1^n v^{z-1} dv
    void derivatives(double z, double* g, int kmax) const; // g[0..kmax] = G_k(z)
    double J(double c, double m) const;             // nested integral above
};

// ∫_lo^hi u^m du for 0 < lo < hi, stable for every m (expm1 form).
double power_integral(double m, double lo, double hi);

// ---------------------------------------------------------------------------
// Deterministic RNG: splitmix64-seeded xoshiro-free plain engine helpers.
// ---------------------------------------------------------------------------
std::uint64_t splitmix64(std::uint64_t x);

// Stream-local seed for (global seed, index) pairs.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed * 0x9E3779B97F4A7C15ull + splitmix64(index + 0x632BE59BD9B4E019ull));
}

} // namespace ionbound::num
