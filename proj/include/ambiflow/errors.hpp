#pragma once

#include <stdexcept>
#include <string>

namespace ambiflow {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside its documented domain (bad quantile level, value outside
// support, non-positive radius, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Empirical CDF construction from an empty sample.
struct EmptySampleError : Error {
    explicit EmptySampleError(const std::string& what) : Error(what) {}
};

// Concentration constants that make ln(C/beta) non-positive.
struct InvalidConstantsError : Error {
    explicit InvalidConstantsError(const std::string& what) : Error(what) {}
};

// Radius ratio requested on the p == n/2 branch, where it depends on the
// unknown concentration constants.
struct UnsupportedBranchError : Error {
    explicit UnsupportedBranchError(const std::string& what) : Error(what) {}
};

// Envelope radius at or above the admissible bound; the band carries no
// information.
struct UninformativeBandError : Error {
    explicit UninformativeBandError(const std::string& what) : Error(what) {}
};

// Characteristic tracing hit a non-positive flux derivative.
struct NotUpstreamError : Error {
    explicit NotUpstreamError(const std::string& what) : Error(what) {}
};

// Characteristic integration failure.
struct TraceError : Error {
    explicit TraceError(const std::string& what) : Error(what) {}
};

// Operation requires a linear physics model.
struct LinearityRequiredError : Error {
    explicit LinearityRequiredError(const std::string& what) : Error(what) {}
};

// Malformed run configuration.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace ambiflow
