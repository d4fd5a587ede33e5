#pragma once

#include <stdexcept>
#include <string>

namespace ymsurf {

// Malformed input text (not valid JSON, bad token). CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates the schema or references unknown
// entities (unknown key, missing edge, negative area). CLI exit code 3.
class SemanticError : public std::runtime_error {
public:
    explicit SemanticError(const std::string& what) : std::runtime_error(what) {}
};

// A requested method cannot be applied to the given measure
// (e.g. sphere-exact partition function on a surface with boundary).
class MethodError : public std::runtime_error {
public:
    explicit MethodError(const std::string& what) : std::runtime_error(what) {}
};

// Character-sum truncation could not meet the requested tolerance at the
// allowed weight cutoff; usually means the time parameter is too small.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Heat-kernel density evaluated to a non-positive value, which signals
// that the truncated sum has lost all significance (area too small).
class DensityUnderflow : public std::runtime_error {
public:
    explicit DensityUnderflow(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ymsurf
