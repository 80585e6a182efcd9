#pragma once

#include <stdexcept>
#include <string>

namespace switchhom {

// Bad arguments: dimension mismatches, out-of-range colours/vertices, malformed input.
class invalid_input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured cap was exceeded (group closure size, explored state count, encoding width).
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text format errors; carries a 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace switchhom
