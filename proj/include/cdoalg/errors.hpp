#pragma once

#include <stdexcept>
#include <string>

namespace cdoalg {

// Violated operation precondition (CLI exit code 1).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (CLI exit code 2). `pos` indexes into `input` for the
// caret diagnostic; pos < 0 means the position is unknown.
struct parse_error : std::runtime_error {
    std::string input;
    long pos = -1;
    parse_error(const std::string& what, std::string in = "", long p = -1)
        : std::runtime_error(what), input(std::move(in)), pos(p) {}
};

} // namespace cdoalg
