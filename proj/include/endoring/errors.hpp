#pragma once

#include <stdexcept>
#include <string>

namespace endoring {

// Every failure the library can report. what() is always prefixed with the
// error kind ("NotAUnit: ..."), so callers that only print the message still
// expose the condition name.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& w) : Error("NotPrime", w) {}
};

struct BadExponent : Error {
    explicit BadExponent(const std::string& w) : Error("BadExponent", w) {}
};

struct Overflow : Error {
    explicit Overflow(const std::string& w) : Error("Overflow", w) {}
};

struct ParamMismatch : Error {
    explicit ParamMismatch(const std::string& w) : Error("ParamMismatch", w) {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& w) : Error("NotAUnit", w) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& w) : Error("NotInvertible", w) {}
};

struct NotCoprime : Error {
    explicit NotCoprime(const std::string& w) : Error("NotCoprime", w) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w) : Error("BudgetExceeded", w) {}
};

// Byte offset of the offending character is kept for REPL error reporting.
struct LexError : Error {
    LexError(const std::string& w, std::size_t off)
        : Error("LexError", w), offset(off) {}
    std::size_t offset;
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};

struct LiteralError : Error {
    explicit LiteralError(const std::string& w) : Error("LiteralError", w) {}
};

struct EvalError : Error {
    explicit EvalError(const std::string& w) : Error("EvalError", w) {}
};

} // namespace endoring
