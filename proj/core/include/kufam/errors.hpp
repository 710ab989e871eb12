#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kufam {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string with_line(const std::string& msg, std::size_t line) {
    return line == 0 ? msg : "line " + std::to_string(line) + ": " + msg;
}
}  // namespace detail

/// A token or line in a family file could not be read.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, std::size_t line = 0)
        : Error(detail::with_line(msg, line)), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

/// A member line does not match the family's uniformity.
class UniformityError : public Error {
public:
    UniformityError(const std::string& msg, std::size_t line)
        : Error(detail::with_line(msg, line)), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The file as a whole is malformed (bad or missing header).
class FormatError : public Error {
public:
    using Error::Error;
};

/// A parameter is outside its documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic would overflow.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A decomposition references the family inconsistently.
class StructureError : public Error {
public:
    using Error::Error;
};

/// A member is covered by no trace; only possible with a broken kernel.
class KernelCoverageError : public Error {
public:
    using Error::Error;
};

/// The family fails the (k,u)-intersecting precondition; carries the witness.
class NotIntersectingError : public Error {
public:
    NotIntersectingError(const std::string& msg, std::vector<std::uint32_t> witness)
        : Error(msg), witness_(std::move(witness)) {}
    const std::vector<std::uint32_t>& witness_indices() const noexcept { return witness_; }

private:
    std::vector<std::uint32_t> witness_;
};

/// Input exceeds a configured size cap for an exact solver.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An internal postcondition failed; always a bug, never a data error.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace kufam
