#include "ionbound/numerics.hpp"

#include "ionbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace ionbound::num {

// ---------------------------------------------------------------------------
// Gauss-Legendre
// ---------------------------------------------------------------------------
namespace {

GaussRule build_gauss(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess for the i-th positive root.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int l = 2; l <= n; ++l) {
                double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_gauss(n)).first;
    return it->second;
}

double gauss_integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const auto& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

// ---------------------------------------------------------------------------
// Adaptive Simpson
// ---------------------------------------------------------------------------
namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double scale = std::max(std::abs(whole), 1e-300);
    return simpson_rec(f, a, b, fa, fm, fb, whole, rel_tol * scale, max_depth);
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    // x = mid + half*tanh((pi/2) sinh t); fixed level-doubling scheme.
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const double tmax = 6.1;
    double h = 1.0;
    auto eval = [&](double t) {
        const double cs = std::cosh(t), sn = std::sinh(t);
        const double w = 0.5 * M_PI * cs / std::pow(std::cosh(0.5 * M_PI * sn), 2);
        const double x = std::tanh(0.5 * M_PI * sn);
        const double xx = mid + half * x;
        if (xx <= a || xx >= b) return 0.0; // underflow at the edges
        return w * f(xx);
    };
    double sum = eval(0.0);
    for (double t = h; t < tmax; t += h) sum += eval(t) + eval(-t);
    double prev = sum * h * half;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t < tmax; t += 2.0 * h) add += eval(t) + eval(-t);
        sum += add;
        double cur = sum * h * half;
        if (level >= 3 && std::abs(cur - prev) <= rel_tol * std::abs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

// ---------------------------------------------------------------------------
// Pairwise sum
// ---------------------------------------------------------------------------
namespace {

double pairwise_rec(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_rec(xs.first(h)) + pairwise_rec(xs.subspan(h));
}

} // namespace

double pairwise_sum(std::span<const double> xs) { return pairwise_rec(xs); }

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------
double bisect_newton(const std::function<double(double)>& f,
                     const std::function<double(double)>& df,
                     double lo, double hi, double width) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    double fhi = f(hi);
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw computation_error("bisect_newton: endpoints do not bracket a root");
    while (hi - lo > width) {
        const double m = 0.5 * (lo + hi);
        if (m <= lo || m >= hi) break; // no representable midpoint left
        const double fm = f(m);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = m;
            flo = fm;
        } else {
            hi = m;
        }
    }
    double x = 0.5 * (lo + hi);
    const double d = df(x);
    if (d != 0.0) {
        const double xn = x - f(x) / d;
        if (xn > lo - width && xn < hi + width) x = xn;
    }
    return x;
}

// ---------------------------------------------------------------------------
// Power-law integrals
// ---------------------------------------------------------------------------
double power_integral(double m, double lo, double hi) {
    const double L = std::log(hi / lo);
    const double t = m + 1.0;
    if (t == 0.0) return L;
    // ∫ u^m du = lo^{t} * expm1(t L)/t
    return std::pow(lo, t) * std::expm1(t * L) / t;
}

PowerLawIntegrals::PowerLawIntegrals(double n) : log_n(std::log(n)) {
    if (!(n > 1.0)) throw domain_error("PowerLawIntegrals: outer radius must exceed 1");
}

double PowerLawIntegrals::E(double z) const {
    const double x = z * log_n;
    if (z == 0.0) return log_n;
    return std::expm1(x) / z;
}

void PowerLawIntegrals::derivatives(double z, double* g, int kmax) const {
    const double L = log_n;
    const double x = z * L;
    if (std::abs(x) < 1.0) {
        // G_k(z) = sum_{i>=k} i!/(i-k)! z^{i-k} L^{i+1} / (i+1)!
        for (int k = 0; k <= kmax; ++k) {
            // term_i = (i!/(i-k)!) z^{i-k} L^{i+1} / (i+1)!, starting at i = k
            double ifac_ratio = 1.0;
            for (int j = 2; j <= k; ++j) ifac_ratio *= j; // k!
            double Lpow = std::pow(L, k + 1);
            double inv_fact = 1.0;
            for (int j = 2; j <= k + 1; ++j) inv_fact /= j; // 1/(k+1)!
            double total = ifac_ratio * Lpow * inv_fact;
            double zp = 1.0;
            for (int i = k + 1; i < k + 80; ++i) {
                zp *= z;
                ifac_ratio *= i;                        // i!/(i-k)!
                ifac_ratio /= (i - k);
                Lpow *= L;
                inv_fact /= (i + 1);
                const double ti = ifac_ratio * zp * Lpow * inv_fact;
                total += ti;
                if (std::abs(ti) < 1e-18 * std::max(std::abs(total), L)) break;
            }
            g[k] = total;
        }
        // rewrite with a cleaner accumulation for k = 0 (pure expm1 form is exact)
        if (z != 0.0) g[0] = std::expm1(x) / z;
        return;
    }
    const double nz = std::exp(x);
    g[0] = std::expm1(x) / z;
    double Lk = 1.0;
    for (int k = 1; k <= kmax; ++k) {
        Lk *= L;
        g[k] = (nz * Lk - k * g[k - 1]) / z;
    }
}

double PowerLawIntegrals::J(double c, double m) const {
    const double z1 = c + m + 2.0;
    const double z2 = c + 1.0;
    const double t = m + 1.0;
    if (std::abs(t) > 0.02) return (E(z1) - E(z2)) / t;
    // Symmetric divided difference: E[z1,z2] = E'(zm) + t^2/24 E'''(zm) + t^4/1920 E^(5)(zm)
    const double zm = 0.5 * (z1 + z2);
    double g[6];
    derivatives(zm, g, 5);
    return g[1] + (t * t) / 24.0 * g[3] + (t * t * t * t) / 1920.0 * g[5];
}

// ---------------------------------------------------------------------------
// splitmix64
// ---------------------------------------------------------------------------
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace ionbound::num
