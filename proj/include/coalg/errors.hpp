#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFinitaryFunctor : Error { using Error::Error; };
struct MalformedValue : Error { using Error::Error; };
struct PartialMap : Error { using Error::Error; };
struct UniverseMismatch : Error { using Error::Error; };
struct FunctorMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ColorMismatch : Error { using Error::Error; };
struct AlphabetMismatch : Error { using Error::Error; };
struct NondeterministicInput : Error { using Error::Error; };
struct AlternatingUnsupported : Error { using Error::Error; };
struct NotWinning : Error { using Error::Error; };
struct NotAccepted : Error { using Error::Error; };
struct NotStronglyAccepted : Error { using Error::Error; };
struct EmptyCycle : Error { using Error::Error; };
struct UndefinedMove : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

/// Raised when an enumeration would exceed the configured cap.
/// what() carries a sizing report naming the functor and the offending count.
struct BlowupGuard : Error {
    BlowupGuard(const std::string& report, std::uint64_t cap)
        : Error(report), cap(cap) {}
    std::uint64_t cap;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

} // namespace coalg
