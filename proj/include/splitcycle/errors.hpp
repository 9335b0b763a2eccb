#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace splitcycle {

// Malformed or inconsistent input: bad candidate ids, parity violations, parse failures.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The request is well-formed but beyond a configured limit (cycle cap, node budget,
// non-qualitative method on a limit graph).
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what, std::vector<int> partial = {})
        : std::runtime_error(what), partial_(std::move(partial)) {}

    // Candidates already established before the limit was hit (may be empty).
    const std::vector<int>& partial() const { return partial_; }

private:
    std::vector<int> partial_;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, int line)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace splitcycle
