#ifndef QFCRI_ERRORS_HPP
#define QFCRI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qfcri {

/// Base class for numeric failures (divergent integrals, exhausted
/// subdivision budgets, degenerate denominators). Input and configuration
/// problems use std::invalid_argument / std::domain_error instead, so
/// callers can map the two groups to different exit codes.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

struct DivergenceError : NumericError {
    explicit DivergenceError(const std::string& what) : NumericError(what) {}
};

struct ConvergenceError : NumericError {
    explicit ConvergenceError(const std::string& what) : NumericError(what) {}
};

struct SingularityError : NumericError {
    explicit SingularityError(const std::string& what) : NumericError(what) {}
};

struct DegeneracyError : NumericError {
    explicit DegeneracyError(const std::string& what) : NumericError(what) {}
};

/// Malformed input files, model specs or configs. Carries no location by
/// itself; throwers embed file/line context in the message.
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qfcri

#endif // QFCRI_ERRORS_HPP
