#pragma once

// Surface syntax shared by LTL formulas and automaton edge guards.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace astra::syntax {

struct Expr {
    enum class Op { True, False, Ident, Not, And, Or, Implies, Until, Eventually, Always };

    Op op;
    std::size_t position = 0;
    std::string name;
    std::unique_ptr<Expr> lhs;
    std::unique_ptr<Expr> rhs;
};

/// Precedence, tightest first: unary (! F G), &, |, U, ->. U and -> associate
/// to the right. Throws SyntaxError.
std::unique_ptr<Expr> parse(std::string_view text);

}  // namespace astra::syntax
