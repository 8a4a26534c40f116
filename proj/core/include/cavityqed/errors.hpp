#pragma once

#include <stdexcept>
#include <string>

namespace cavityqed {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dimensionful quantity requested from a Ratio-mode configuration.
class UnitModeError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Collective coupling at or beyond the critical point where a stable result does not exist.
class InstabilityError : public Error {
public:
    using Error::Error;
};

// Running coupling reached 1, or a log singularity of the broadening-free response was hit.
class PoleError : public Error {
public:
    using Error::Error;
};

class DegenerateModeError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, int sweeps) : Error(what), sweeps_(sweeps) {}
    int sweeps() const noexcept { return sweeps_; }

private:
    int sweeps_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what, int line = 0, std::string field = {})
        : Error(format(what, line, field)), line_(line), field_(std::move(field)) {}

    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string format(const std::string& what, int line, const std::string& field) {
        std::string out;
        if (line > 0) out += "line " + std::to_string(line) + ": ";
        if (!field.empty()) out += "'" + field + "': ";
        return out + what;
    }

    int line_;
    std::string field_;
};

} // namespace cavityqed
