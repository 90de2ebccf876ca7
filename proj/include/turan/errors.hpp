#pragma once

#include <stdexcept>
#include <string>

namespace turan {

// thrown when an input exceeds a size the implementation supports
struct unsupported_size : std::runtime_error {
    explicit unsupported_size(const std::string& msg) : std::runtime_error(msg) {}
};

// thrown when an exact computation would exceed its configured budget
struct resource_limit : std::runtime_error {
    explicit resource_limit(const std::string& msg) : std::runtime_error(msg) {}
};

// malformed input file
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

} // namespace turan
