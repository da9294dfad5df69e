#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prodobs {

enum class ErrorCode {
    DuplicateLabel,
    UnknownEndpoint,
    DuplicateEdge,
    InvalidLabel,
    EmptyFactor,
    LabelCollision,
    SizeMismatch,
    NotAPermutation,
    UnknownObserver,
    NumericOverflow,
    NotNumericallyObservable,
    DivergedEstimate,
    InvalidArgument,
    Parse,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised by the graph readers. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(ErrorCode::Parse, what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace prodobs
