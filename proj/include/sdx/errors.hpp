// errors.hpp — Exception taxonomy shared by all sdx modules

#pragma once

#include <stdexcept>
#include <string>

namespace sdx {

// Base class so callers (and the CLI) can map failures to a stable category.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& what)
        : std::runtime_error(what), category_(std::move(category)) {}
    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

// A sampled grid is too coarse for the requested transform.
class ResolutionError : public Error {
public:
    explicit ResolutionError(const std::string& what) : Error("resolution_error", what) {}
};

// An iterative numerical scheme could not reach its accuracy target.
// Carries the error estimate actually achieved.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double achieved)
        : Error("accuracy_error", what), achieved_(achieved) {}
    double achieved_error() const noexcept { return achieved_; }

private:
    double achieved_;
};

// Finite-horizon data needs a tail model but none was supplied.
class TailNeededError : public Error {
public:
    explicit TailNeededError(const std::string& what) : Error("tail_needed", what) {}
};

// Nonlinear fit failed (non-convergence, rank deficiency, bad window, ...).
class FitError : public Error {
public:
    explicit FitError(const std::string& what) : Error("fit_error", what) {}
};

// Malformed input file. Carries the offending 1-based line number (0 = n/a).
class ParseError : public Error {
public:
    ParseError(const std::string& what, long line = 0)
        : Error("parse_error", line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const noexcept { return line_; }

private:
    long line_;
};

} // namespace sdx
