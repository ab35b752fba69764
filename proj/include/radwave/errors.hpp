#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace radwave {

// Nonpositive volume/temperature, out-of-range characteristic speed, etc.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Root bracketing or quadrature gave up.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Far-field data that does not connect through a 1-rarefaction and a 3-rarefaction.
class RarefactionConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Broken internal invariant (should be unreachable for validated inputs).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Invalid scenario (initial data, grid) detected before time stepping.
class ScenarioError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// File could not be read or written; the message names the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BlowUpError : public std::runtime_error {
public:
    BlowUpError(const std::string& what, std::size_t cell, double t)
        : std::runtime_error(what), cell_(cell), t_(t) {}

    std::size_t cell() const noexcept { return cell_; }
    double time() const noexcept { return t_; }

private:
    std::size_t cell_;
    double t_;
};

// Configuration validation failure carrying every problem found, each
// prefixed by the JSON path it refers to.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> problems)
        : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    static std::string join(const std::vector<std::string>& items) {
        std::string out = "invalid configuration:";
        for (const auto& s : items) {
            out += "\n  ";
            out += s;
        }
        return out;
    }

    std::vector<std::string> problems_;
};

}  // namespace radwave
