#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rnc {

// Byte range [start, end) into the source text of a parse.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, SourceSpan s) : Error(msg), span(s) {}
    SourceSpan span;
};

struct RangeError : ParseError {
    using ParseError::ParseError;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct Blowup : Error {
    using Error::Error;
};

struct NotClausal : Error {
    using Error::Error;
};

struct NotHorn : Error {
    using Error::Error;
};

struct NotHnc : Error {
    using Error::Error;
};

struct NotConstantFree : Error {
    using Error::Error;
};

struct InvalidOcc : Error {
    using Error::Error;
};

struct SideConditionViolated : Error {
    using Error::Error;
};

struct TopLevelOcc : Error {
    using Error::Error;
};

struct OccOutsideScope : Error {
    using Error::Error;
};

struct OverlappingOccurrences : Error {
    using Error::Error;
};

struct ThresholdNotInChain : Error {
    using Error::Error;
};

} // namespace rnc
