// Timing comparison of the OpenMP kernels against their serial reference
// paths. The two must agree bit-for-bit; this binary reports the speedup.

#include "ionbound/radial.hpp"
#include "ionbound/variational.hpp"
#include "ionbound/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using ionbound::num::Exec;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-24s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   identical %s\n",
                name, serial_ms, parallel_ms, serial_ms / parallel_ms, identical ? "yes" : "NO");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel path degenerates to serial\n");
#endif

    {
        namespace v = ionbound::variational;
        v::MinimizeOptions opts;
        opts.n_starts = 48;
        opts.require_convergence = false;
        v::AlphaResult rs, rp;
        const double ts = time_ms([&] { rs = v::minimize_alpha(12, 2.0, opts, Exec::serial); });
        const double tp = time_ms([&] { rp = v::minimize_alpha(12, 2.0, opts, Exec::parallel); });
        report("alpha multistart N=12", ts, tp, rs.value == rp.value && rs.n_converged == rp.n_converged);
    }
    {
        namespace r = ionbound::radial;
        r::BetaUpperBound us, up;
        r::BetaSearchOptions opts;
        opts.grid = 192;
        const double ts = time_ms([&] { us = r::beta_upper_bound(2.5, opts, Exec::serial); });
        const double tp = time_ms([&] { up = r::beta_upper_bound(2.5, opts, Exec::parallel); });
        report("beta grid search", ts, tp, us.beta_up == up.beta_up && us.p == up.p);
    }
    {
        namespace w = ionbound::verify;
        w::GridOptions opts;
        opts.resolution = 600;
        std::vector<w::InequalityReport> as, ap;
        const double ts = time_ms([&] { as = w::run_suite(opts, Exec::serial); });
        const double tp = time_ms([&] { ap = w::run_suite(opts, Exec::parallel); });
        bool same = as.size() == ap.size();
        for (std::size_t i = 0; same && i < as.size(); ++i)
            same = as[i].max_slack_violation == ap[i].max_slack_violation;
        report("inequality suite", ts, tp, same);
    }
    return 0;
}
