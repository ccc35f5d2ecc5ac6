#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "endoring/module_point.hpp"

namespace endoring {

enum class TokenKind {
    Integer,
    Ident,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    Equals,
    End,
};

struct Token {
    TokenKind kind;
    Int value = 0;      // Integer tokens
    std::string text;   // Ident tokens
    std::size_t offset = 0;
};

// Splits one input line into tokens. '#' starts a comment running to the end
// of the line. Throws LexError (with byte offset) on illegal characters.
std::vector<Token> tokenize(std::string_view input);

// Expression tree. Matrix and point literals are validated (and converted)
// at parse time, so evaluation never sees raw out-of-range entries.
struct ExprAst {
    enum class Kind {
        IntLit,
        MatrixLit,
        PointLit,
        Var,
        Add,
        Sub,
        Mul,
        Pow,
        Inv,
        Neg,
        MinPoly,
        AnnPoly,
        Apply,
        Mod,
    };

    ExprAst() = default;
    explicit ExprAst(Kind k) : kind(k) {}

    Kind kind = Kind::IntLit;
    std::vector<ExprAst> children;
    Int int_value = 0;                  // IntLit value; Pow exponent
    std::string name;                   // Var
    std::optional<EndoMatrix> matrix;   // MatrixLit
    std::optional<ModulePoint> point;   // PointLit
};

// One statement: "let <ident> = <expr>" binds, a bare expression evaluates.
struct Statement {
    std::optional<std::string> let_name;
    ExprAst expr;
};

// Parses a token stream. Throws ParseError on malformed syntax and
// LiteralError on structurally valid literals with bad entries.
Statement parse(const RingParams& pr, const std::vector<Token>& tokens);

// tokenize + parse in one step. Returns nothing for blank/comment-only lines.
std::optional<Statement> parse_statement(const RingParams& pr, std::string_view line);

} // namespace endoring
