#include "ionbound/specfun.hpp"

#include "ionbound/errors.hpp"

#include <cmath>

namespace ionbound::specfun {

double legendre_eval(int l, double t) {
    if (l < 0) throw domain_error("legendre_eval: degree must be nonnegative");
    if (std::abs(t) > 1.0) throw domain_error("legendre_eval: argument outside [-1,1]");
    if (l == 0) return 1.0;
    if (l == 1) return t;
    double p0 = 1.0, p1 = t;
    for (int n = 2; n <= l; ++n) {
        const double p2 = ((2.0 * n - 1.0) * t * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

namespace {

using i128 = __int128;

i128 factorial_i128(int n) {
    i128 r = 1;
    for (int j = 2; j <= n; ++j) r *= j;
    return r;
}

i128 double_factorial_i128(int n) { // n >= -1, odd n up to 41 fits easily
    i128 r = 1;
    for (int j = n; j >= 2; j -= 2) r *= j;
    return r;
}

i128 pow2_i128(int n) { return i128(1) << n; }

// c_{2n,2u} = (4u+1)(2n)! / (2^{n-u} (n-u)! (2(n+u)+1)!!)
// c_{2n+1,2u+1} = (4u+3)(2n+1)! / (2^{n-u} (n-u)! (2(n+u)+3)!!)
double coeff_exact(int k, int l) {
    if (k % 2 == 0) {
        const int n = k / 2, u = l / 2;
        const i128 num = i128(4 * u + 1) * factorial_i128(2 * n);
        const i128 den = pow2_i128(n - u) * factorial_i128(n - u) * double_factorial_i128(2 * (n + u) + 1);
        return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
    }
    const int n = (k - 1) / 2, u = (l - 1) / 2;
    const i128 num = i128(4 * u + 3) * factorial_i128(2 * n + 1);
    const i128 den = pow2_i128(n - u) * factorial_i128(n - u) * double_factorial_i128(2 * (n + u) + 3);
    return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

double coeff_lgamma(int k, int l) {
    if (k % 2 == 0) {
        const int n = k / 2, u = l / 2;
        const double ln = std::log(4.0 * u + 1.0) + std::lgamma(2.0 * n + 1.0) -
                          (n - u) * std::log(2.0) - std::lgamma(n - u + 1.0) -
                          log_double_factorial(2 * (n + u) + 1);
        return std::exp(ln);
    }
    const int n = (k - 1) / 2, u = (l - 1) / 2;
    const double ln = std::log(4.0 * u + 3.0) + std::lgamma(2.0 * n + 2.0) -
                      (n - u) * std::log(2.0) - std::lgamma(n - u + 1.0) -
                      log_double_factorial(2 * (n + u) + 3);
    return std::exp(ln);
}

} // namespace

double legendre_coeff(int k, int l) {
    if (k < 0 || l < 0) throw domain_error("legendre_coeff: indices must be nonnegative");
    if (l > k) return 0.0;
    if ((k + l) % 2 != 0) return 0.0;
    if (k <= 20) return coeff_exact(k, l);
    return coeff_lgamma(k, l);
}

double gen_binomial(double a, int k) {
    if (k < 0) throw domain_error("gen_binomial: k must be nonnegative");
    double r = 1.0;
    for (int n = 0; n < k; ++n) r *= (a - n) / (n + 1.0);
    return r;
}

double gamma_fn(double x) {
    if (!(x > 0.0)) throw domain_error("gamma_fn: argument must be positive");
    return std::tgamma(x);
}

double double_factorial(int n) {
    if (n < -1) throw domain_error("double_factorial: argument must be >= -1");
    double r = 1.0;
    for (int j = n; j >= 2; j -= 2) r *= j;
    return r;
}

double log_double_factorial(int n) {
    if (n < -1) throw domain_error("log_double_factorial: argument must be >= -1");
    if (n <= 1) return 0.0;
    if (n % 2 == 1) {
        // (2m+1)!! = (2m+1)! / (2^m m!)
        const int m = (n - 1) / 2;
        return std::lgamma(n + 1.0) - m * std::log(2.0) - std::lgamma(m + 1.0);
    }
    const int m = n / 2; // (2m)!! = 2^m m!
    return m * std::log(2.0) + std::lgamma(m + 1.0);
}

LegendreCoeffTable::LegendreCoeffTable(int max_degree_) : max_degree(max_degree_) {
    if (max_degree < 0) throw domain_error("LegendreCoeffTable: degree must be nonnegative");
    entries.assign(static_cast<std::size_t>(max_degree + 1) * (max_degree + 1), 0.0);
    for (int k = 0; k <= max_degree; ++k)
        for (int l = k % 2; l <= k; l += 2)
            entries[static_cast<std::size_t>(k) * (max_degree + 1) + l] = legendre_coeff(k, l);
}

} // namespace ionbound::specfun
