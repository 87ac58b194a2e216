#pragma once

#include <vector>

namespace ionbound::specfun {

// Legendre polynomial P_l(t) on [-1,1] by the Bonnet three-term recurrence.
double legendre_eval(int l, double t);

// Expansion coefficient c_{k,l} in t^k = sum_l c_{k,l} P_l(t),
// c_{k,l} = (2l+1)/2 ∫_{-1}^1 t^k P_l(t) dt.
// Exact integer arithmetic for k <= 20, log-Gamma form beyond.
double legendre_coeff(int k, int l);

// Generalized binomial coefficient binom(a, k) = prod_{n<k} (a-n) / k!.
double gen_binomial(double a, int k);

// Gamma function for x > 0 (domain checked wrapper).
double gamma_fn(double x);

// Double factorial with (-1)!! = 1.
double double_factorial(int n);

// ln(n!!) for n >= -1; used where n!! overflows.
double log_double_factorial(int n);

// Immutable table of c_{k,l} for 0 <= l <= k <= max_degree.
struct LegendreCoeffTable {
    int max_degree = 0;
    std::vector<double> entries; // row-major, entries[k*(max_degree+1)+l]

    explicit LegendreCoeffTable(int max_degree_);
    double operator()(int k, int l) const { return entries[static_cast<std::size_t>(k) * (max_degree + 1) + l]; }
};

} // namespace ionbound::specfun
