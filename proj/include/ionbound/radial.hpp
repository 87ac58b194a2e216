#pragma once

#include "ionbound/numerics.hpp"

#include <vector>

namespace ionbound::radial {

// Root data for the quotient minimum min_{t in [0,1]} (1+t^s)/(1+t^{s-1}).
struct BofS {
    double s = 0.0;
    double t0 = 0.0;         // unique root of t^s + s t + 1 - s in (0,1)
    double b = 0.0;          // (s-1)/(s t0)
    double beta_lower = 0.0; // 1/b, lower bound for beta_s
};

BofS b_of_s(double s); // s in (1,3]

// beta_2 = 2(sqrt2-1), beta_3 = (3/2)((1+sqrt2)^{2/3}-1)/(1+sqrt2)^{1/3}
double beta_closed_form(int s);

// Trial probability density A |x|^{-p} supported on the shell 1 <= |x| <= n.
struct RadialPowerLawMeasure {
    double p = 0.0;
    double n = 0.0;
    double A = 0.0; // normalization: 4 pi A ∫_1^n r^{2-p} dr = 1
};

RadialPowerLawMeasure make_measure(double p, double n);

// ∫ |x|^t dμ, closed form with the logarithmic exponent handled exactly.
double radial_moment(const RadialPowerLawMeasure& mu, double t);

// I_s(μ) = (1/2) ∬ (|x|^s+|y|^s)/max(|x|,|y|) dμ dμ via nested antiderivatives.
double radial_energy(const RadialPowerLawMeasure& mu, double s);

// Independent path: 2-D adaptive quadrature split along the diagonal.
double radial_energy_quadrature(const RadialPowerLawMeasure& mu, double s, double rel_tol = 1e-10);

struct BetaSearchOptions {
    double p_min = -2.0, p_max = 6.0;
    double n_min = 1.02, n_max = 200.0; // log-spaced in n
    int grid = 64;
    int polish_iters = 200;
};

struct BetaUpperBound {
    double s = 0.0;
    double beta_up = 0.0; // min over the family of I_s/moment_{s-1}
    double b_num = 0.0;   // 1/beta_up, numeric lower bound for 1/beta_s
    double p = 0.0, n = 0.0;
};

// Grid search plus Nelder-Mead polish over the two-parameter family.
BetaUpperBound beta_upper_bound(double s, const BetaSearchOptions& opts = {},
                                num::Exec exec = num::Exec::parallel);

// The 30-point s-grid used by the b(s)/b_num(s) table.
std::vector<double> figure2_grid();

} // namespace ionbound::radial
