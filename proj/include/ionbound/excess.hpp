#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ionbound::excess {

struct BoundBreakdown {
    double Z = 0.0;
    double s = 0.0;
    double leading_coeff = 0.0;                   // b(s)
    std::vector<std::pair<double, double>> terms; // (power of Z, coefficient)
    double total = 0.0;
    double valid_from_Z = 0.0;
    double lieb = 0.0; // 2Z + 1
    double nam = 0.0;  // 1.22 Z + 3 Z^{1/3}
};

// N_c(Z) < (1/2)(sqrt2+1) Z + 2.96 Z^{1/3}, valid for Z >= 2.
BoundBreakdown bound_s2(double Z);

// N_c(Z) < b(3) Z + 3.90 Z^{1/3} + 0.0134 + 0.184 Z^{-1/3} + 0.0196 Z^{-2/3}, Z >= 4.
BoundBreakdown bound_s3(double Z);

struct GeneralBound {
    double Z = 0.0;
    double s = 0.0;
    double b = 0.0;      // leading coefficient b(s)
    double lambda = 0.0; // (3/(2s))^{1/3} b(s)^{1/3}
    double A = 0.0;      // kinetic correction coefficient
    double n_bound = 0.0;
    double r_at_bound = 0.0; // lambda * N^{-1/3}
    bool r_below_one = false;
    bool r_below_half = false;
};

// Solves the implicit proof inequality for the largest admissible N in [Z, 3Z].
GeneralBound bound_general(double Z, double s);

// Max over N/Z in [1, 5/2] of the scaled correction for the quadratic weight.
double proof_constant_s2();

struct ProofConstantsS3 {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;
    double a1_argmax = 0.0;
};

// Correction coefficients for the cubic weight, evaluated with the proof's
// interval constants 1/beta_3 <= 1.1185 and c <= 1.5855 over N/Z in
// [1/beta_3, 9/4] (Z >= 4 together with N < 2Z+1 pins N/Z below 9/4).
ProofConstantsS3 proof_constant_s3();

struct BoundComparison {
    double Z = 0.0;
    double lieb = 0.0;
    double nam = 0.0;
    std::optional<double> ours_s2;
    std::optional<double> ours_s3;
    std::string argmin;
};

BoundComparison compare_bounds(double Z);

struct Crossovers {
    double s2_vs_lieb = 0.0; // smallest Z where the s=2 bound beats 2Z+1
    double s3_vs_s2 = 0.0;   // smallest Z where the s=3 bound beats the s=2 bound
};

Crossovers crossovers();

} // namespace ionbound::excess
