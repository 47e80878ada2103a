#ifndef LATDEC_ERRORS_HPP
#define LATDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latdec {

// Malformed input document (bad JSON, wrong arity, unknown names).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates a model invariant.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap (enumeration size, graph size) was exceeded.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed, e.g. a decoded clique mass that is not
// close to an integer.
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latdec

#endif  // LATDEC_ERRORS_HPP
