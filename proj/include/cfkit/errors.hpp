#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfkit {

// Error taxonomy. kind() drives the CLI exit-code mapping:
// Config/Parse -> usage error (2), Domain -> numeric domain error (3).
enum class ErrorKind { Config, Domain, Parse };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Bad configuration or usage: missing parameter, mismatched series degrees,
// unknown preset, out-of-range request.
class ConfigError : public Error {
public:
    explicit ConfigError(std::string msg) : Error(ErrorKind::Config, std::move(msg)) {}
};

// Numeric domain violation: division by zero, zero partial denominator,
// pole of a rising factorial, wrong q-region.
class DomainError : public Error {
public:
    explicit DomainError(std::string msg) : Error(ErrorKind::Domain, std::move(msg)) {}
};

// Syntax error from the expression parser; carries the byte offset and the
// token set that would have been accepted at that point.
class ParseError : public Error {
public:
    ParseError(std::string msg, std::size_t offset, std::vector<std::string> expected)
        : Error(ErrorKind::Parse, format(msg, offset, expected)),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string format(const std::string& msg, std::size_t offset,
                              const std::vector<std::string>& expected) {
        std::string out = msg + " at offset " + std::to_string(offset);
        if (!expected.empty()) {
            out += " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) out += ", ";
                out += expected[i];
            }
            out += ")";
        }
        return out;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Rethrow an error with a context prefix, preserving its kind.
[[noreturn]] inline void rethrow_with_context(const Error& e, const std::string& prefix) {
    switch (e.kind()) {
        case ErrorKind::Domain: throw DomainError(prefix + e.what());
        case ErrorKind::Parse:
        case ErrorKind::Config: throw ConfigError(prefix + e.what());
    }
    throw ConfigError(prefix + e.what());
}

}  // namespace cfkit
