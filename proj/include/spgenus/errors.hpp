#ifndef SPGENUS_ERRORS_HPP
#define SPGENUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spgenus {

// Malformed input document (bad line, self-loop, empty file, unknown label).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that falls outside the supported graph class
// (disconnected, degree > 3, treewidth > 2, not a dmt-string, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration census exceeds the caller-supplied bound.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// A checked internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace spgenus

#endif
