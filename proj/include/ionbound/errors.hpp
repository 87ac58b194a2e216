#pragma once

#include <stdexcept>
#include <string>

namespace ionbound {

// Thrown when an input violates an operation's stated domain.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Base for runtime computation failures (maps to CLI exit code 1).
struct computation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degenerate_configuration_error : computation_error {
    using computation_error::computation_error;
};

struct no_convergence_error : computation_error {
    using computation_error::computation_error;
};

struct consistency_error : computation_error {
    using computation_error::computation_error;
};

struct quadrature_failure : computation_error {
    using computation_error::computation_error;
};

struct search_failure : computation_error {
    using computation_error::computation_error;
};

// A proven inequality came out violated; signals an implementation bug.
struct violation_error : computation_error {
    using computation_error::computation_error;
};

} // namespace ionbound
