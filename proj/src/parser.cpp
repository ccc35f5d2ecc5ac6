#include "endoring/parser.hpp"

#include <cctype>
#include <unordered_set>

namespace endoring {

namespace {

const std::unordered_set<std::string>& keywords() {
    static const std::unordered_set<std::string> kw = {"let",     "inv",   "neg",  "minpoly",
                                                       "annpoly", "apply", "mod"};
    return kw;
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case TokenKind::Integer: return "integer " + std::to_string(t.value);
        case TokenKind::Ident: return "'" + t.text + "'";
        case TokenKind::End: return "end of input";
        case TokenKind::LBracket: return "'['";
        case TokenKind::RBracket: return "']'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Comma: return "','";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Caret: return "'^'";
        case TokenKind::Equals: return "'='";
    }
    return "?";
}

class Parser {
public:
    Parser(const RingParams& pr, const std::vector<Token>& tokens) : pr_(pr), tokens_(tokens) {}

    Statement statement() {
        Statement stmt;
        if (at(TokenKind::Ident) && peek().text == "let") {
            ++pos_;
            if (!at(TokenKind::Ident) || keywords().count(peek().text)) {
                throw ParseError("expected a binding name after 'let', got " + describe(peek()));
            }
            stmt.let_name = peek().text;
            ++pos_;
            expect(TokenKind::Equals, "'=' after the binding name");
        }
        stmt.expr = expr();
        if (!at(TokenKind::End)) {
            throw ParseError("unexpected " + describe(peek()) + " after the expression");
        }
        return stmt;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }

    bool at(TokenKind k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }

    const Token& expect(TokenKind k, const std::string& what) {
        if (!at(k)) {
            throw ParseError("expected " + what + ", got " + describe(peek()));
        }
        return tokens_[pos_++];
    }

    bool accept(TokenKind k) {
        if (!at(k)) return false;
        ++pos_;
        return true;
    }

    ExprAst expr() {
        ExprAst left = term();
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            const bool plus = at(TokenKind::Plus);
            ++pos_;
            ExprAst node{plus ? ExprAst::Kind::Add : ExprAst::Kind::Sub};
            node.children.push_back(std::move(left));
            node.children.push_back(term());
            left = std::move(node);
        }
        return left;
    }

    ExprAst term() {
        ExprAst left = factor();
        while (accept(TokenKind::Star)) {
            ExprAst node{ExprAst::Kind::Mul};
            node.children.push_back(std::move(left));
            node.children.push_back(factor());
            left = std::move(node);
        }
        return left;
    }

    ExprAst factor() {
        ExprAst base = atom();
        if (accept(TokenKind::Caret)) {
            ExprAst node{ExprAst::Kind::Pow};
            node.int_value = expect(TokenKind::Integer, "a nonnegative integer exponent").value;
            node.children.push_back(std::move(base));
            return node;
        }
        return base;
    }

    ExprAst call(ExprAst::Kind kind) {
        ++pos_; // function name
        expect(TokenKind::LParen, "'(' after the function name");
        ExprAst node{kind};
        node.children.push_back(expr());
        if (kind == ExprAst::Kind::Apply) {
            expect(TokenKind::Comma, "',' between the matrix and the point");
            node.children.push_back(point_or_expr());
        } else if (kind == ExprAst::Kind::Mod) {
            expect(TokenKind::Comma, "',' between the value and the modulus");
            node.children.push_back(expr());
        }
        expect(TokenKind::RParen, "')' closing the call");
        return node;
    }

    // apply's second argument: a "(x,y)" literal when the lookahead matches,
    // otherwise any expression evaluating to a point.
    ExprAst point_or_expr() {
        if (at(TokenKind::LParen) && at(TokenKind::Integer, 1) && at(TokenKind::Comma, 2) &&
            at(TokenKind::Integer, 3) && at(TokenKind::RParen, 4)) {
            const Int x = peek(1).value;
            const Int y = peek(3).value;
            pos_ += 5;
            if (x >= pr_.p) {
                throw LiteralError("point entry " + std::to_string(x) +
                                   " is out of range [0, " + std::to_string(pr_.p) + ")");
            }
            if (y >= pr_.modulus) {
                throw LiteralError("point entry " + std::to_string(y) +
                                   " is out of range [0, " + std::to_string(pr_.modulus) + ")");
            }
            ExprAst node{ExprAst::Kind::PointLit};
            node.point = make_point(pr_, x, y);
            return node;
        }
        return expr();
    }

    ExprAst matrix_literal() {
        expect(TokenKind::LBracket, "'[' opening a matrix literal");
        expect(TokenKind::LBracket, "'[' opening the first row");
        const Int a = expect(TokenKind::Integer, "an integer entry").value;
        expect(TokenKind::Comma, "',' between row entries");
        const Int b = expect(TokenKind::Integer, "an integer entry").value;
        expect(TokenKind::RBracket, "']' closing the first row");
        expect(TokenKind::Comma, "',' between rows");
        expect(TokenKind::LBracket, "'[' opening the second row");
        const Int c_full = expect(TokenKind::Integer, "an integer entry").value;
        expect(TokenKind::Comma, "',' between row entries");
        const Int d = expect(TokenKind::Integer, "an integer entry").value;
        expect(TokenKind::RBracket, "']' closing the second row");
        expect(TokenKind::RBracket, "']' closing the matrix literal");
        ExprAst node{ExprAst::Kind::MatrixLit};
        node.matrix = matrix_from_full(pr_, a, b, c_full, d);
        return node;
    }

    ExprAst atom() {
        if (at(TokenKind::Ident)) {
            const std::string& name = peek().text;
            if (name == "inv") return call(ExprAst::Kind::Inv);
            if (name == "neg") return call(ExprAst::Kind::Neg);
            if (name == "minpoly") return call(ExprAst::Kind::MinPoly);
            if (name == "annpoly") return call(ExprAst::Kind::AnnPoly);
            if (name == "apply") return call(ExprAst::Kind::Apply);
            if (name == "mod") return call(ExprAst::Kind::Mod);
            if (keywords().count(name)) {
                throw ParseError("'" + name + "' cannot be used here");
            }
            ExprAst node{ExprAst::Kind::Var};
            node.name = name;
            ++pos_;
            return node;
        }
        if (at(TokenKind::Integer)) {
            ExprAst node{ExprAst::Kind::IntLit};
            node.int_value = peek().value;
            ++pos_;
            return node;
        }
        if (at(TokenKind::LBracket)) {
            return matrix_literal();
        }
        if (accept(TokenKind::LParen)) {
            ExprAst inner = expr();
            expect(TokenKind::RParen, "')'");
            return inner;
        }
        throw ParseError("expected an expression, got " + describe(peek()));
    }

    const RingParams& pr_;
    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < input.size()) {
        const char ch = input[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == '#') break; // comment to end of line
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = i;
            Int value = 0;
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) {
                const Int digit = input[i] - '0';
                if (value > (kMaxModulus * kMaxModulus - digit) / 10) {
                    throw LexError("integer literal too large", start);
                }
                value = value * 10 + digit;
                ++i;
            }
            out.push_back(Token{TokenKind::Integer, value, "", start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = i;
            while (i < input.size() && (std::isalnum(static_cast<unsigned char>(input[i])) ||
                                        input[i] == '_')) {
                ++i;
            }
            out.push_back(Token{TokenKind::Ident, 0,
                                std::string(input.substr(start, i - start)), start});
            continue;
        }
        TokenKind kind;
        switch (ch) {
            case '[': kind = TokenKind::LBracket; break;
            case ']': kind = TokenKind::RBracket; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case ',': kind = TokenKind::Comma; break;
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '^': kind = TokenKind::Caret; break;
            case '=': kind = TokenKind::Equals; break;
            default:
                throw LexError(std::string("illegal character '") + ch + "' at offset " +
                                   std::to_string(i),
                               i);
        }
        out.push_back(Token{kind, 0, "", i});
        ++i;
    }
    out.push_back(Token{TokenKind::End, 0, "", input.size()});
    return out;
}

Statement parse(const RingParams& pr, const std::vector<Token>& tokens) {
    return Parser(pr, tokens).statement();
}

std::optional<Statement> parse_statement(const RingParams& pr, std::string_view line) {
    std::vector<Token> tokens = tokenize(line);
    if (tokens.size() == 1) return std::nullopt; // only the End marker
    return parse(pr, tokens);
}

} // namespace endoring
