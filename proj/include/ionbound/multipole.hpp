#pragma once

#include <vector>

namespace ionbound::multipole {

// Sphere average ∫_{S^2} |a ê + r ω|^lam dω/(4π) for lam > -2,
// = ((a+r)^{lam+2} - |a-r|^{lam+2}) / (2 r a (lam+2)).
double sphere_average_power(double a_norm, double r, double lam);

// Multipole moment λ_{l,s}(r) = (1/2)∫_{-1}^1 (1+r^2+2rt)^{s/2} P_l(t) dt.
// Computed by quadrature and cross-checked against the binomial/Legendre
// series with a certified truncation tail; disagreement raises.
double lambda_moment(int l, double s, double r);

// Closed form for the l = 0 moment.
double lambda_moment_l0(double s, double r);

struct MomentSeries {
    double s = 0.0;
    double r = 0.0;
    double q = 0.0;                // 2r/(1+r^2)
    std::vector<double> moments;   // λ_{l,s}(r), l = 0..L
    double tail_bound = 0.0;       // certified bound on Σ_{l>L} |λ_l|
};

MomentSeries compute_moments(double s, double r, int L);

// A_k = |binom(s/2,k)| Σ_{l=2}^k c_{k,l}/(2l+1).
double a_k(int k, double s);

// s-free majorant M_k with A_k <= prefactor(s) * M_k for s in [2,3],
// prefactor(s) = (s/2)(s/2-1)(2-s/2). These are the tail summands actually
// accumulated on a computer; exact A_k values are strictly smaller.
double a_k_majorant(int k);

struct TailSum {
    double prefactor = 0.0;       // (s/2)(s/2-1)(2-s/2)
    double partial_even = 0.0;    // prefactor * Σ majorants over even k in [4,K]
    double partial_odd = 0.0;     // prefactor * Σ majorants over odd k in [4,K]
    double partial = 0.0;         // partial_even + partial_odd
    double delta = 0.0;           // prefactor * 2/(5(K-1)), remainder past K
    double certified_total = 0.0; // partial + delta, upper bound for Σ_{k>=4} A_k
};

TailSum tail_sum(double s, int K);

// Remainder polynomial f(r,s) = (s/2)(s/2-1)(4/15 + (2-s/2)(8/105) r + (2-s/2)(448/625) r^2).
double f_remainder(double r, double s);

// Convexity bound g(r) from the comparison estimate; nonnegative for s >= 2.
double g_convexity(double r, double s);

struct CsTailCheck {
    double direct = 0.0; // Σ_{l=2}^L |λ_{l,s}(r)| plus certified tail
    double bound = 0.0;  // r^2 f(r,s)
};

// Verifies C_s(r) <= r^2 f(r,s); a violation signals an implementation bug.
CsTailCheck cs_tail_vs_bound(double s, double r, int L);

} // namespace ionbound::multipole
