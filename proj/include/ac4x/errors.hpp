#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ac4x {

// Typed failures used across the toolkit. All derive from std::runtime_error
// so callers can catch broadly; the CLI maps categories to exit codes.

struct NotUnitSelfDual : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAntiInvariant : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSelfDual : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NormViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularFrequency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotTaming : std::runtime_error {
    std::size_t point;
    NotTaming(std::size_t p, const std::string& msg)
        : std::runtime_error(msg), point(p) {}
};

struct SectionDegenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankDeficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IdenticallyPlusMinus : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : std::runtime_error {
    int iterations;
    double last_update;
    NonConvergence(int iters, double upd, const std::string& msg)
        : std::runtime_error(msg), iterations(iters), last_update(upd) {}
};

struct PositivityLoss : std::runtime_error {
    std::size_t point;
    PositivityLoss(std::size_t p, const std::string& msg)
        : std::runtime_error(msg), point(p) {}
};

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerically checked invariant failed (test-style assertion in library code).
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ac4x
