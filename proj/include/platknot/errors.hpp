#pragma once

#include <stdexcept>
#include <string>

namespace platknot {

// Invalid domain values or unmet mathematical preconditions.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (documents, command arguments).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A library self-check failed. Indicates a bug, never bad user input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace platknot
