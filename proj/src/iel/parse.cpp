#include "mdpforge/iel/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace mdpforge::iel {

namespace {

enum class Tok {
    Number,
    Ident,
    KwLet,
    KwReturn,
    Assign,
    Semi,
    Comma,
    Dot,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Lt,
    Le,
    Gt,
    Ge,
    EqEq,
    End,
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Number: return "number";
        case Tok::Ident: return "identifier";
        case Tok::KwLet: return "'let'";
        case Tok::KwReturn: return "'return'";
        case Tok::Assign: return "'='";
        case Tok::Semi: return "';'";
        case Tok::Comma: return "','";
        case Tok::Dot: return "'.'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Lt: return "'<'";
        case Tok::Le: return "'<='";
        case Tok::Gt: return "'>'";
        case Tok::Ge: return "'>='";
        case Tok::EqEq: return "'=='";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    double number = 0.0;
    SourceSpan span;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws();
        SourceSpan sp{line_, col_};
        if (pos_ >= src_.size()) return {Tok::End, "", 0.0, sp};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(sp);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident(sp);
        advance();
        switch (c) {
            case '=':
                if (peek() == '=') {
                    advance();
                    return {Tok::EqEq, "==", 0.0, sp};
                }
                return {Tok::Assign, "=", 0.0, sp};
            case ';': return {Tok::Semi, ";", 0.0, sp};
            case ',': return {Tok::Comma, ",", 0.0, sp};
            case '.': return {Tok::Dot, ".", 0.0, sp};
            case '[': return {Tok::LBracket, "[", 0.0, sp};
            case ']': return {Tok::RBracket, "]", 0.0, sp};
            case '(': return {Tok::LParen, "(", 0.0, sp};
            case ')': return {Tok::RParen, ")", 0.0, sp};
            case '+': return {Tok::Plus, "+", 0.0, sp};
            case '-': return {Tok::Minus, "-", 0.0, sp};
            case '*': return {Tok::Star, "*", 0.0, sp};
            case '/': return {Tok::Slash, "/", 0.0, sp};
            case '<':
                if (peek() == '=') {
                    advance();
                    return {Tok::Le, "<=", 0.0, sp};
                }
                return {Tok::Lt, "<", 0.0, sp};
            case '>':
                if (peek() == '=') {
                    advance();
                    return {Tok::Ge, ">=", 0.0, sp};
                }
                return {Tok::Gt, ">", 0.0, sp};
            default: break;
        }
        std::string text(1, c);
        return {Tok::End, "\x01" + text, 0.0, sp};  // sentinel: bad character
    }

private:
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void advance() {
        if (pos_ < src_.size()) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token lex_number(SourceSpan sp) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        if (peek() == '.') {
            advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t mark = pos_;
            advance();
            if (peek() == '+' || peek() == '-') advance();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
            } else {
                // not an exponent after all; rewind
                while (pos_ > mark) {
                    --pos_;
                    --col_;
                }
            }
        }
        std::string text(src_.substr(start, pos_ - start));
        double value = 0.0;
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || p != text.data() + text.size() || !std::isfinite(value)) {
            return {Tok::End, "\x02" + text, 0.0, sp};  // sentinel: bad number
        }
        return {Tok::Number, text, value, sp};
    }

    Token lex_ident(SourceSpan sp) {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
        std::string text(src_.substr(start, pos_ - start));
        if (text == "let") return {Tok::KwLet, text, 0.0, sp};
        if (text == "return") return {Tok::KwReturn, text, 0.0, sp};
        return {Tok::Ident, text, 0.0, sp};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

bool is_reserved(std::string_view name) {
    return name == "s" || name == "sp" || name == "a" || name == "let" || name == "return" ||
           find_builtin(name) != nullptr;
}

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    ParseResult run() {
        ParseResult result;
        if (cur_.kind == Tok::End && cur_.text.empty()) {
            fail(cur_.span, "empty program", {"'let'", "'return'"});
            result.errors = std::move(errors_);
            return result;
        }

        // let statements, innermost-first assembly afterwards
        std::vector<std::pair<std::pair<std::string, SourceSpan>, AstPtr>> lets;
        while (cur_.kind == Tok::KwLet && ok()) {
            SourceSpan sp = cur_.span;
            advance();
            if (cur_.kind != Tok::Ident) {
                fail(cur_.span, "expected binding name after 'let'", {"identifier"});
                break;
            }
            std::string name = cur_.text;
            if (is_reserved(name)) {
                fail(cur_.span, "'" + name + "' is reserved and cannot be bound", {"identifier"});
                break;
            }
            advance();
            if (!expect(Tok::Assign)) break;
            AstPtr value = parse_expr();
            if (!ok()) break;
            if (!expect(Tok::Semi)) break;
            lets.push_back({{std::move(name), sp}, std::move(value)});
        }

        AstPtr body;
        if (ok()) {
            if (cur_.kind != Tok::KwReturn) {
                fail(cur_.span, "expected 'return'", {"'return'", "'let'"});
            } else {
                advance();
                body = parse_expr();
                if (ok() && cur_.kind != Tok::End) {
                    fail(cur_.span, "unexpected input after return expression", {"end of input"});
                }
            }
        }

        if (!ok() || !body) {
            result.errors = std::move(errors_);
            return result;
        }
        for (auto it = lets.rbegin(); it != lets.rend(); ++it) {
            body = Ast::let(it->first.first, it->second, std::move(body), it->first.second);
        }
        result.program = std::move(body);
        return result;
    }

private:
    bool ok() const { return errors_.empty(); }

    void advance() {
        cur_ = lexer_.next();
        if (cur_.kind == Tok::End && !cur_.text.empty()) {
            if (cur_.text[0] == '\x01') {
                fail(cur_.span, "unexpected character '" + cur_.text.substr(1) + "'", {});
            } else {
                fail(cur_.span, "number out of range: " + cur_.text.substr(1), {"number"});
            }
            cur_.text.clear();
        }
    }

    bool expect(Tok kind) {
        if (cur_.kind != kind) {
            fail(cur_.span, std::string("expected ") + tok_name(kind), {tok_name(kind)});
            return false;
        }
        advance();
        return true;
    }

    void fail(SourceSpan sp, std::string message, std::vector<std::string> expected) {
        if (errors_.empty()) errors_.push_back({sp, std::move(message), std::move(expected)});
    }

    AstPtr parse_expr() { return parse_comparison(); }

    AstPtr parse_comparison() {
        AstPtr lhs = parse_additive();
        while (ok()) {
            Builtin b;
            switch (cur_.kind) {
                case Tok::Lt: b = Builtin::Lt; break;
                case Tok::Le: b = Builtin::Le; break;
                case Tok::Gt: b = Builtin::Gt; break;
                case Tok::Ge: b = Builtin::Ge; break;
                case Tok::EqEq: b = Builtin::Eq; break;
                default: return lhs;
            }
            SourceSpan sp = cur_.span;
            advance();
            AstPtr rhs = parse_additive();
            if (!ok()) return nullptr;
            lhs = Ast::apply(b, {std::move(lhs), std::move(rhs)}, sp);
        }
        return lhs;
    }

    AstPtr parse_additive() {
        AstPtr lhs = parse_multiplicative();
        while (ok() && (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus)) {
            Builtin b = cur_.kind == Tok::Plus ? Builtin::Add : Builtin::Sub;
            SourceSpan sp = cur_.span;
            advance();
            AstPtr rhs = parse_multiplicative();
            if (!ok()) return nullptr;
            lhs = Ast::apply(b, {std::move(lhs), std::move(rhs)}, sp);
        }
        return lhs;
    }

    AstPtr parse_multiplicative() {
        AstPtr lhs = parse_unary();
        while (ok() && (cur_.kind == Tok::Star || cur_.kind == Tok::Slash)) {
            Builtin b = cur_.kind == Tok::Star ? Builtin::Mul : Builtin::Div;
            SourceSpan sp = cur_.span;
            advance();
            AstPtr rhs = parse_unary();
            if (!ok()) return nullptr;
            lhs = Ast::apply(b, {std::move(lhs), std::move(rhs)}, sp);
        }
        return lhs;
    }

    AstPtr parse_unary() {
        if (cur_.kind == Tok::Minus) {
            SourceSpan sp = cur_.span;
            advance();
            AstPtr operand = parse_unary();
            if (!ok()) return nullptr;
            // fold so negative literals round-trip through pretty()
            if (operand->kind == Ast::Kind::Literal) return Ast::literal(-operand->value, sp);
            return Ast::apply(Builtin::Neg, {std::move(operand)}, sp);
        }
        return parse_postfix();
    }

    AstPtr parse_postfix() {
        AstPtr expr = parse_primary();
        while (ok() && cur_.kind == Tok::LBracket) {
            SourceSpan sp = cur_.span;
            advance();
            AstPtr idx = parse_expr();
            if (!ok()) return nullptr;
            if (!expect(Tok::RBracket)) return nullptr;
            expr = Ast::index(std::move(expr), std::move(idx), sp);
        }
        return expr;
    }

    AstPtr parse_primary() {
        SourceSpan sp = cur_.span;
        switch (cur_.kind) {
            case Tok::Number: {
                double v = cur_.number;
                advance();
                return Ast::literal(v, sp);
            }
            case Tok::LParen: {
                advance();
                AstPtr e = parse_expr();
                if (!ok()) return nullptr;
                if (!expect(Tok::RParen)) return nullptr;
                return e;
            }
            case Tok::LBracket: {
                advance();
                std::vector<AstPtr> elems;
                elems.push_back(parse_expr());
                while (ok() && cur_.kind == Tok::Comma) {
                    advance();
                    elems.push_back(parse_expr());
                }
                if (!ok()) return nullptr;
                if (!expect(Tok::RBracket)) return nullptr;
                return Ast::vector_literal(std::move(elems), sp);
            }
            case Tok::Ident: {
                std::string name = cur_.text;
                if (name == "s" || name == "sp") {
                    advance();
                    if (!expect(Tok::Dot)) return nullptr;
                    if (cur_.kind != Tok::Ident) {
                        fail(cur_.span, "expected field name after '" + name + ".'", {"identifier"});
                        return nullptr;
                    }
                    std::string field = cur_.text;
                    advance();
                    return Ast::field_ref(name == "s" ? FieldNs::State : FieldNs::NextState, std::move(field), sp);
                }
                if (name == "a") {
                    advance();
                    return Ast::field_ref(FieldNs::Action, "", sp);
                }
                if (const BuiltinInfo* b = find_builtin(name)) {
                    advance();
                    if (!expect(Tok::LParen)) return nullptr;
                    std::vector<AstPtr> args;
                    args.push_back(parse_expr());
                    while (ok() && cur_.kind == Tok::Comma) {
                        advance();
                        args.push_back(parse_expr());
                    }
                    if (!ok()) return nullptr;
                    if (!expect(Tok::RParen)) return nullptr;
                    int n = static_cast<int>(args.size());
                    if (n < b->min_arity || (b->max_arity >= 0 && n > b->max_arity)) {
                        fail(sp,
                             "wrong number of arguments to " + name + " (got " + std::to_string(n) + ")",
                             {});
                        return nullptr;
                    }
                    return Ast::apply(b->id, std::move(args), sp);
                }
                advance();
                return Ast::var_ref(std::move(name), sp);
            }
            default:
                fail(sp, std::string("unexpected ") + tok_name(cur_.kind),
                     {"number", "identifier", "'('", "'['", "'-'"});
                return nullptr;
        }
    }

    Lexer lexer_;
    Token cur_{Tok::End, "", 0.0, {}};
    std::vector<ParseError> errors_;
};

}  // namespace

ParseResult parse(std::string_view source) {
    return Parser(source).run();
}

std::string format_errors(const std::vector<ParseError>& errors) {
    std::ostringstream os;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (i) os << "; ";
        const auto& e = errors[i];
        os << e.span.line << ":" << e.span.col << ": " << e.message;
        if (!e.expected.empty()) {
            os << " (expected ";
            for (std::size_t j = 0; j < e.expected.size(); ++j) {
                if (j) os << " | ";
                os << e.expected[j];
            }
            os << ")";
        }
    }
    return os.str();
}

}  // namespace mdpforge::iel
