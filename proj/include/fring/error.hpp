#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fring {

/// Base of every error the library throws. The harness maps the concrete
/// type onto a process exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (foreign element, non-idempotent e, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// A ring or search space exceeds a configured limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. Line and column are 1-based; `source` names the
/// file when there is one.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column, const std::string& source = "")
        : Error((source.empty() ? "" : source + ":") + std::to_string(line) + ":" + std::to_string(column) + ": " +
                message),
          message_(message), line_(line), column_(column), source_(source) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& source() const noexcept { return source_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
    std::string source_;
};

/// Completion derived 1 = 0 from the relations.
class InconsistentPresentation : public Error {
public:
    using Error::Error;
};

/// The irreducible-word basis did not close within the probe length.
class NotFiniteDimensional : public Error {
public:
    using Error::Error;
};

}  // namespace fring
