#include "ionbound/constants.hpp"

#include "ionbound/errors.hpp"
#include "ionbound/specfun.hpp"

#include <cmath>

namespace ionbound::constants {

// Literature value of the Lieb-Thirring-type constant used throughout.
namespace {
constexpr double kLiebThirring = 1.456;
}

double lieb_constant(double p) {
    if (!(p >= 1.0 && p <= 2.0)) throw domain_error("lieb_constant: p must lie in [1,2]");
    using specfun::gamma_fn;
    const double t = 3.0 / p;
    const double sqrt_pi = std::sqrt(M_PI);
    const double num = std::pow(15.0 * sqrt_pi / 8.0 * gamma_fn(t) / gamma_fn(t + 3.5), 0.5 * p) *
                       (gamma_fn(t + 1.0) / gamma_fn(t + 3.5));
    const double den = std::pow(sqrt_pi / 4.0 * gamma_fn(t + 1.0) / gamma_fn(t + 2.5), 1.0 + 5.0 * p / 6.0);
    return 0.75 * sqrt_pi * std::pow(4.0 * M_PI, -p / 3.0) / std::pow(p, 1.0 + 0.5 * p) * num / den;
}

double lieb_inv_root(double p) { return std::pow(lieb_constant(p), -1.0 / p); }

double kappa() {
    return std::sqrt(5.0) * std::cbrt(2.0 / (9.0 * M_PI * M_PI) * kLiebThirring);
}

double kinetic_K3() {
    return 0.6 * std::pow(kLiebThirring / (6.0 * M_PI * M_PI), -2.0 / 3.0);
}

double ground_state_coeff(int u) {
    if (u < 1) throw domain_error("ground_state_coeff: spin degeneracy must be >= 1");
    return 0.5 * std::pow(static_cast<double>(u), 2.0 / 3.0) * std::cbrt(3.0);
}

double kinetic_correction_coeff(double s) {
    if (!(s >= 2.0 && s <= 3.0)) throw domain_error("kinetic_correction_coeff: s must lie in [2,3]");
    return (s * s - 1.0) / 8.0 * lieb_inv_root(s - 1.0) * kappa();
}

ConstantsReport constants_report(double p, int u) {
    ConstantsReport rep;
    rep.p = p;
    rep.C_p = lieb_constant(p);
    rep.C_p_inv_root = lieb_inv_root(p);
    rep.kappa = kappa();
    rep.K3 = kinetic_K3();
    rep.A_hyd = ground_state_coeff(u);
    rep.c_composite = lieb_inv_root(2.0) * kappa();
    return rep;
}

} // namespace ionbound::constants
