#pragma once

#include <stdexcept>
#include <string>

namespace softflip {

// Source-text problem: carries the 1-based line the parser was on.
struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

// Bad user-facing configuration (unknown benchmark, empty candidate set, ...). CLI exit 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A benchmark that misbehaves with no fault injected. CLI exit 3.
struct BenchmarkDefect : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace softflip
