#ifndef BLEX_ERROR_HPP
#define BLEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace blex {

// Base class for all recoverable errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (ontology files, corpora, parse trees, binary blobs).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
    ParseError(const std::string& source, int line, const std::string& msg)
        : Error(source + ":" + std::to_string(line) + ": " + msg) {}
};

// Structurally well-formed input that violates a documented invariant.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Model/runtime failures: over-length inputs, non-finite losses, shape
// mismatches between a checkpoint and the requested configuration.
class ModelError : public Error {
public:
    explicit ModelError(const std::string& msg) : Error(msg) {}
};

}  // namespace blex

#endif  // BLEX_ERROR_HPP
