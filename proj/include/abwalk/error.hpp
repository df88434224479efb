#ifndef ABWALK_ERROR_HPP
#define ABWALK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace abwalk {

// Bad user-supplied arguments (dimension mismatch, out-of-range index, ...).
class ArgumentError : public std::runtime_error {
public:
    explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; carries the offending line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, long line = -1)
        : std::runtime_error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Invalid configuration: infeasible benchmark parameters, missing seeds, ...
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Benchmark generation could not satisfy a constraint within the retry budget.
class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solve did not converge; carries the best iterate found.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& msg, std::vector<double> best, double residual)
        : std::runtime_error(msg), best_iterate(std::move(best)), residual(residual) {}
    std::vector<double> best_iterate;
    double residual;
};

}  // namespace abwalk

#endif
