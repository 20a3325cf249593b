#pragma once

#include <stdexcept>
#include <string>

namespace sandwich {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string & what) : std::runtime_error(what) {}
};

/// Malformed text input (instance files, DIMACS, completions).
class ParseError : public Error {
public:
    ParseError(const std::string & what, int line) :
        Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace sandwich
