#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace natprod {

enum class ErrorKind {
    DomainMismatch,
    ShapeMismatch,
    TypeMismatch,
    NotAUnit,
    NotInvertible,
    UnsupportedDomain,
    OutsideCone,
    TooLarge,
    ZeroDivisorEntry,
    ParseError,
    RaggedCuts,
    NotSquare,
    NotClosed,
    NotMonicizable,
    SingularLead,
    ZeroLead,
    NoRationalRoot,
    NotMember,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::UnsupportedDomain: return "UnsupportedDomain";
    case ErrorKind::OutsideCone: return "OutsideCone";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroDivisorEntry: return "ZeroDivisorEntry";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RaggedCuts: return "RaggedCuts";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotMonicizable: return "NotMonicizable";
    case ErrorKind::SingularLead: return "SingularLead";
    case ErrorKind::ZeroLead: return "ZeroLead";
    case ErrorKind::NoRationalRoot: return "NoRationalRoot";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Errors that signal a mathematical negative result rather than a misuse of
/// the API. The CLI maps these to exit code 1 and everything else to 2.
constexpr bool is_negative_finding(ErrorKind k) {
    switch (k) {
    case ErrorKind::NotAUnit:
    case ErrorKind::NotInvertible:
    case ErrorKind::NotClosed:
    case ErrorKind::NotMonicizable:
    case ErrorKind::SingularLead:
    case ErrorKind::NoRationalRoot:
    case ErrorKind::ZeroDivisorEntry:
        return true;
    default:
        return false;
    }
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    /// Parse errors carry the 1-based source position.
    Error(ErrorKind kind, const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(std::string(to_string(kind)) + " at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + what),
          kind_(kind), line_(line), column_(column) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> line() const noexcept { return line_; }
    std::optional<std::size_t> column() const noexcept { return column_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> line_;
    std::optional<std::size_t> column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace natprod
