#pragma once

#include <stdexcept>
#include <string>

namespace sqzeno {

// Numeric invariant failure while integrating or post-processing a
// trajectory.  `step` is the offending integrator step (-1 when the failure
// is not tied to a step).
class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(const std::string& msg, long step = -1)
        : std::runtime_error(msg), step_(step) {}

    long step() const noexcept { return step_; }

private:
    long step_;
};

// Malformed or inconsistent configuration input.  Carries the source line
// (1-based, 0 when unknown) and the offending field name when available.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg, int line = 0, std::string field = {})
        : std::runtime_error(msg), line_(line), field_(std::move(field)) {}

    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

} // namespace sqzeno
