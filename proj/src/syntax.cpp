#include "syntax.hpp"

#include <cctype>
#include <vector>

#include "astra/errors.hpp"

namespace astra::syntax {
namespace {

enum class Tok { Ident, True, False, Not, And, Or, Implies, Until, Eventually, Always, Next, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t position;
    std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                ++i;
            }
            std::string word(text.substr(start, i - start));
            Tok kind = Tok::Ident;
            if (word == "true") kind = Tok::True;
            else if (word == "false") kind = Tok::False;
            else if (word == "U") kind = Tok::Until;
            else if (word == "F") kind = Tok::Eventually;
            else if (word == "G") kind = Tok::Always;
            else if (word == "X") kind = Tok::Next;
            out.push_back({kind, start, std::move(word)});
            continue;
        }
        auto two = text.substr(i, 2);
        if (two == "->") {
            out.push_back({Tok::Implies, start, "->"});
            i += 2;
        } else if (two == "&&" || two == "||") {
            out.push_back({two == "&&" ? Tok::And : Tok::Or, start, std::string(two)});
            i += 2;
        } else if (c == '!') {
            out.push_back({Tok::Not, start, "!"});
            ++i;
        } else if (c == '&') {
            out.push_back({Tok::And, start, "&"});
            ++i;
        } else if (c == '|') {
            out.push_back({Tok::Or, start, "|"});
            ++i;
        } else if (c == '(') {
            out.push_back({Tok::LParen, start, "("});
            ++i;
        } else if (c == ')') {
            out.push_back({Tok::RParen, start, ")"});
            ++i;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
    }
    out.push_back({Tok::End, text.size(), ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    std::unique_ptr<Expr> parse_all() {
        auto e = implies();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(message, peek().position);
    }

    static std::unique_ptr<Expr> node(Expr::Op op, std::size_t position,
                                      std::unique_ptr<Expr> lhs = nullptr,
                                      std::unique_ptr<Expr> rhs = nullptr) {
        auto e = std::make_unique<Expr>();
        e->op = op;
        e->position = position;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        return e;
    }

    std::unique_ptr<Expr> implies() {
        auto lhs = until();
        if (peek().kind == Tok::Implies) {
            const auto position = take().position;
            return node(Expr::Op::Implies, position, std::move(lhs), implies());
        }
        return lhs;
    }

    std::unique_ptr<Expr> until() {
        auto lhs = disjunction();
        if (peek().kind == Tok::Until) {
            const auto position = take().position;
            return node(Expr::Op::Until, position, std::move(lhs), until());
        }
        return lhs;
    }

    std::unique_ptr<Expr> disjunction() {
        auto lhs = conjunction();
        while (peek().kind == Tok::Or) {
            const auto position = take().position;
            lhs = node(Expr::Op::Or, position, std::move(lhs), conjunction());
        }
        return lhs;
    }

    std::unique_ptr<Expr> conjunction() {
        auto lhs = unary();
        while (peek().kind == Tok::And) {
            const auto position = take().position;
            lhs = node(Expr::Op::And, position, std::move(lhs), unary());
        }
        return lhs;
    }

    std::unique_ptr<Expr> unary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Not: {
                const auto position = take().position;
                return node(Expr::Op::Not, position, unary());
            }
            case Tok::Eventually: {
                const auto position = take().position;
                return node(Expr::Op::Eventually, position, unary());
            }
            case Tok::Always: {
                const auto position = take().position;
                return node(Expr::Op::Always, position, unary());
            }
            case Tok::Next:
                fail("the next operator X is not part of the logic");
            default:
                return primary();
        }
    }

    std::unique_ptr<Expr> primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Ident: {
                auto e = node(Expr::Op::Ident, t.position);
                e->name = take().text;
                return e;
            }
            case Tok::True:
                return node(Expr::Op::True, take().position);
            case Tok::False:
                return node(Expr::Op::False, take().position);
            case Tok::LParen: {
                take();
                auto e = implies();
                if (peek().kind != Tok::RParen) fail("expected ')'");
                take();
                return e;
            }
            case Tok::End:
                fail("unexpected end of input");
            default:
                fail("unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse(std::string_view text) {
    return Parser(tokenize(text)).parse_all();
}

}  // namespace astra::syntax
