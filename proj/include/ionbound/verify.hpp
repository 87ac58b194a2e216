#pragma once

#include "ionbound/numerics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ionbound::verify {

struct InequalityReport {
    std::string name;
    std::string grid;
    long n_points = 0;
    double max_slack_violation = 0.0; // <= 0 (plus fp slack) for a pass
    std::optional<std::vector<double>> witness;

    bool passed(double fp_slack = 1e-12) const { return max_slack_violation <= fp_slack; }
};

struct GridOptions {
    int resolution = 200;        // lattice points per axis
    long random_samples = 10000; // seeded interior fuzz points
    std::uint64_t seed = 2024;
};

// Two-sided chain on G(q) = ((1+r)^q - (1-r)^q)/(2 r q) over r in (0,1], p in [1,4]:
//   G(p+1) >= G(p) >= (1 - (p-1)/3 r^2) G(p+1).
InequalityReport check_power_chain(const GridOptions& opts = {}, num::Exec exec = num::Exec::parallel);

// (s+2)/(s+1) * ((r+1)^{s+1}-(1-r)^{s+1})/((r+1)^{s+2}-(1-r)^{s+2}) >= 1 - (s/3) r^2
// over r in (0,1), s in [0,4].
InequalityReport check_prefactor_bound(const GridOptions& opts = {}, num::Exec exec = num::Exec::parallel);

// Taylor chain for the cubic weight over r in (0, 0.53]:
//   5/(r^2(r^2+10)+5) <= 1 - 2r^2 + (19/5) r^4,
//   the degree-8 remainder polynomial stays <= 0,
//   1 + 5/(r^2(r^2+10)+5) r^2 f(r,3) <= 1 + r^2/5 + r^3/35 on (0, 0.5].
InequalityReport check_taylor_s3(const GridOptions& opts = {}, num::Exec exec = num::Exec::parallel);

// g(r) >= 0 and f(r,s) <= f(r,3) over r in (0,1], s in [2,3].
InequalityReport check_g_f_positivity(const GridOptions& opts = {}, num::Exec exec = num::Exec::parallel);

// Symmetrized two-point sums for gamma(u,v) = v^s min(u,v)/(3u max(u,v)^2) and
// its untilded variant stay nonnegative on random pairs.
InequalityReport check_positivity_lemma(long samples = 10000, std::uint64_t seed = 2024,
                                        num::Exec exec = num::Exec::parallel);

// All checks in a fixed order. Names: power-chain, prefactor, taylor, gf, positivity.
std::vector<InequalityReport> run_suite(const GridOptions& opts = {},
                                        num::Exec exec = num::Exec::parallel);

std::vector<InequalityReport> run_suite_named(const std::string& name,
                                              const GridOptions& opts = {},
                                              num::Exec exec = num::Exec::parallel);

} // namespace ionbound::verify
