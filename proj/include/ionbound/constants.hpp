#pragma once

namespace ionbound::constants {

// Sharp constant C_p in the functional inequality
//   (∫ f^{5/3})^{p/2} ∫ |x|^p f >= C_p (∫ f)^{1+5p/6},  p in [1,2],
// via the Gamma-function closed form.
double lieb_constant(double p);

// C_p^{-1/p}
double lieb_inv_root(double p);

// kappa = sqrt(5) (2/(9 pi^2) * 1.456)^{1/3}
double kappa();

// K_3 = (3/5) (1.456/(6 pi^2))^{-2/3}
double kinetic_K3();

// Hydrogenic ground-state coefficient (1/2) u^{2/3} 3^{1/3}.
double ground_state_coeff(int u);

// (s^2-1)/8 * C_{s-1}^{-1/(s-1)} * kappa, for s in [2,3].
double kinetic_correction_coeff(double s);

struct ConstantsReport {
    double p = 0.0;
    double C_p = 0.0;
    double C_p_inv_root = 0.0; // C_p^{-1/p}
    double kappa = 0.0;
    double K3 = 0.0;
    double A_hyd = 0.0;       // ground_state_coeff(u)
    double c_composite = 0.0; // C_2^{-1/2} * kappa
};

ConstantsReport constants_report(double p = 2.0, int u = 2);

} // namespace ionbound::constants
