#include "ionbound/multipole.hpp"

#include "ionbound/errors.hpp"
#include "ionbound/numerics.hpp"
#include "ionbound/specfun.hpp"

#include <cmath>

namespace ionbound::multipole {

double sphere_average_power(double a_norm, double r, double lam) {
    if (!(lam > -2.0)) throw domain_error("sphere_average_power: exponent must exceed -2");
    if (!(a_norm > 0.0 && r > 0.0)) throw domain_error("sphere_average_power: radii must be positive");
    const double hi = std::pow(a_norm + r, lam + 2.0);
    const double lo = std::pow(std::abs(a_norm - r), lam + 2.0);
    return (hi - lo) / (2.0 * r * a_norm * (lam + 2.0));
}

double lambda_moment_l0(double s, double r) {
    return (std::pow(1.0 + r, s + 2.0) - std::pow(1.0 - r, s + 2.0)) / (2.0 * (s + 2.0) * r);
}

namespace {

// Direct Gauss-Legendre evaluation of the moment integral.
double lambda_quadrature(int l, double s, double r) {
    const auto& rule = num::gauss_legendre(128);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i];
        sum += rule.weights[i] * std::pow(1.0 + r * r + 2.0 * r * t, 0.5 * s) *
               specfun::legendre_eval(l, t);
    }
    return 0.5 * sum;
}

// Series (1+r^2)^{s/2} Σ_{n>=l} binom(s/2,n) q^n c_{n,l}/(2l+1) with a
// certified remainder bound appended.
struct SeriesResult {
    double value;
    double tail;
};

SeriesResult lambda_series(int l, double s, double r) {
    const double q = 2.0 * r / (1.0 + r * r);
    const double pref = std::pow(1.0 + r * r, 0.5 * s);
    const int n_max = 2000;
    double sum = 0.0;
    double binom = specfun::gen_binomial(0.5 * s, l);
    double qn = std::pow(q, l);
    for (int n = l; n <= n_max; ++n) {
        if (n > l) {
            binom *= (0.5 * s - (n - 1)) / n;
            qn *= q;
        }
        sum += binom * qn * specfun::legendre_coeff(n, l) / (2.0 * l + 1.0);
        if (binom == 0.0) break; // s/2 integer: finite sum
    }
    // |binom(s/2,n)| <= (s/2)|s/2-1| / (n(n-1)) for s in [2,4], and
    // Σ_{n>N} 1/(n(n-1)) = 1/N; refine with the q^n geometric factor.
    const double cpre = 0.5 * s * std::abs(0.5 * s - 1.0);
    double tail;
    if (q < 0.999) {
        tail = cpre * std::pow(q, n_max + 1) / ((1.0 - q) * n_max * (n_max + 1.0));
    } else {
        tail = cpre / n_max;
    }
    return {pref * sum, pref * tail};
}

} // namespace

double lambda_moment(int l, double s, double r) {
    if (l < 0) throw domain_error("lambda_moment: l must be nonnegative");
    if (!(s >= 2.0 && s <= 4.0)) throw domain_error("lambda_moment: s must lie in [2,4]");
    if (!(r > 0.0 && r <= 1.0)) throw domain_error("lambda_moment: r must lie in (0,1]");
    const double direct = lambda_quadrature(l, s, r);
    const SeriesResult series = lambda_series(l, s, r);
    if (std::abs(direct - series.value) > 1e-8 + series.tail)
        throw consistency_error("lambda_moment: quadrature and series paths disagree");
    return direct;
}

MomentSeries compute_moments(double s, double r, int L) {
    MomentSeries out;
    out.s = s;
    out.r = r;
    out.q = 2.0 * r / (1.0 + r * r);
    out.moments.reserve(L + 1);
    for (int l = 0; l <= L; ++l) out.moments.push_back(lambda_moment(l, s, r));
    // Σ_{l>L} |λ_l| <= (1+r^2)^{s/2} Σ_{n>L} |binom| q^n Σ_{l>L} c_{n,l}/(2l+1)
    //              <= (1+r^2)^{s/2} / (2L+3) * (s/2)|s/2-1| / L
    const double cpre = 0.5 * s * std::abs(0.5 * s - 1.0);
    out.tail_bound = std::pow(1.0 + r * r, 0.5 * s) / (2.0 * L + 3.0) * cpre / std::max(L, 1);
    return out;
}

double a_k(int k, double s) {
    if (k < 2) throw domain_error("a_k: index must be at least 2");
    double inner = 0.0;
    for (int l = 2; l <= k; ++l) inner += specfun::legendre_coeff(k, l) / (2.0 * l + 1.0);
    return std::abs(specfun::gen_binomial(0.5 * s, k)) * inner;
}

double a_k_majorant(int k) {
    if (k < 4) throw domain_error("a_k_majorant: defined for k >= 4");
    using specfun::log_double_factorial;
    double total = 0.0;
    if (k % 2 == 0) {
        // A_{2m} <= pref * Σ_{l=1}^m (2m-2)! / (2^{m-l} (m-l)! (2(m+l)+1)!!)
        const int m = k / 2;
        for (int l = 1; l <= m; ++l)
            total += std::exp(std::lgamma(2.0 * m - 1.0) - (m - l) * std::log(2.0) -
                              std::lgamma(m - l + 1.0) - log_double_factorial(2 * (m + l) + 1));
    } else {
        // A_{2m+1} <= pref * Σ_{l=1}^m (2m-1)! / (2^{m-l} (m-l)! (2(m+l)+3)!!)
        const int m = (k - 1) / 2;
        for (int l = 1; l <= m; ++l)
            total += std::exp(std::lgamma(2.0 * m) - (m - l) * std::log(2.0) -
                              std::lgamma(m - l + 1.0) - log_double_factorial(2 * (m + l) + 3));
    }
    return total;
}

TailSum tail_sum(double s, int K) {
    if (K < 4) throw domain_error("tail_sum: K must be at least 4");
    TailSum out;
    out.prefactor = 0.5 * s * (0.5 * s - 1.0) * (2.0 - 0.5 * s);
    std::vector<double> even, odd;
    for (int k = 4; k <= K; ++k) {
        const double m = a_k_majorant(k);
        (k % 2 == 0 ? even : odd).push_back(m);
    }
    out.partial_even = out.prefactor * num::pairwise_sum(even);
    out.partial_odd = out.prefactor * num::pairwise_sum(odd);
    out.partial = out.partial_even + out.partial_odd;
    out.delta = out.prefactor * 2.0 / (5.0 * (K - 1.0));
    out.certified_total = out.partial + out.delta;
    if (K >= 2001 && !(out.certified_total <= out.prefactor * 448.0 / 10000.0 + 1e-6))
        throw violation_error("tail_sum: certified total exceeds the 448/10000 ceiling");
    return out;
}

double f_remainder(double r, double s) {
    if (!(r >= 0.0)) throw domain_error("f_remainder: r must be nonnegative");
    return 0.5 * s * (0.5 * s - 1.0) *
           (4.0 / 15.0 + (2.0 - 0.5 * s) * (8.0 / 105.0) * r +
            (2.0 - 0.5 * s) * (448.0 / 625.0) * r * r);
}

double g_convexity(double r, double s) {
    if (!(r > 0.0)) throw domain_error("g_convexity: r must be positive");
    const double q = 2.0 * r / (1.0 + r * r);
    const double mean = 0.5 * (std::pow(1.0 + q, 0.5 * s) + std::pow(1.0 - q, 0.5 * s));
    const double corr = s * (s - 2.0) / 15.0 * q * q * std::pow(1.0 + q, 0.5 * (s - 4.0));
    return std::pow(1.0 + r * r, 0.5 * s) * (mean - corr);
}

CsTailCheck cs_tail_vs_bound(double s, double r, int L) {
    if (L < 10) throw domain_error("cs_tail_vs_bound: L must be at least 10");
    if (!(s >= 2.0 && s <= 3.0)) throw domain_error("cs_tail_vs_bound: s must lie in [2,3]");
    const MomentSeries series = compute_moments(s, r, L);
    std::vector<double> abs_moments;
    for (int l = 2; l <= L; ++l) abs_moments.push_back(std::abs(series.moments[l]));
    CsTailCheck out;
    out.direct = num::pairwise_sum(abs_moments) + series.tail_bound;
    out.bound = r * r * f_remainder(r, s);
    if (!(out.direct <= out.bound + 1e-8))
        throw violation_error("cs_tail_vs_bound: C_s(r) exceeded r^2 f(r,s)");
    return out;
}

} // namespace ionbound::multipole
