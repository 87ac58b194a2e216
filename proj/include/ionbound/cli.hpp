#pragma once

#include "ionbound/numerics.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ionbound::cli {

enum class OutputFormat { json, csv };

struct RunConfig {
    std::uint64_t seed = 12345;
    int n_starts = 0; // 0 = per-N default
    int max_iter = 2000;
    double tol_grad = 1e-8;
    int grid_resolution = 200;
    long random_samples = 10000;
    OutputFormat format = OutputFormat::json;
    std::string out_path; // empty = stdout
};

// Parse a flat key=value config file into `cfg`; unknown keys are an error.
void load_config(const std::string& path, RunConfig& cfg);

// Figure data emitters (CSV with %.6f formatting to match the tables).
void write_figure1(std::ostream& os, const RunConfig& cfg, num::Exec exec = num::Exec::parallel);
void write_figure2(std::ostream& os, const RunConfig& cfg, num::Exec exec = num::Exec::parallel);

// Full dispatcher; returns the process exit code:
// 0 success, 1 computation error, 2 usage error, 3 verification failure.
int dispatch(int argc, const char* const* argv);

} // namespace ionbound::cli
