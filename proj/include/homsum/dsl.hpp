#ifndef HOMSUM_DSL_HPP
#define HOMSUM_DSL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "homsum/space_expr.hpp"

namespace homsum::dsl {

/// Byte range [start, end) into the parsed text.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourceSpan span)
        : std::runtime_error(message), span_(span)
    {
    }
    SourceSpan span() const { return span_; }

private:
    SourceSpan span_;
};

/// Grammar, loosest binding first:
///   expr    := smash (('v' smash)* | ('#' smash)*)   -- 'v' and '#' do not mix
///   smash   := prod ('^' prod)*
///   prod    := unary ('*' unary)*
///   unary   := 'Sigma' unary | primary               -- unicode Sigma accepted
///   primary := 'S(n)' | 'CP(n)' | 'M(n,k)' | 'SS(r)'
///            | 'punct(expr)' | 'halfsmash(expr, expr)' | '(' expr ')'
/// All infix operators associate to the left. Whitespace is insignificant.
SpaceExpr parse(std::string_view text);

/// Canonical text with minimal parentheses; parse(print(e)) == e.
std::string print(const SpaceExpr& e);

}  // namespace homsum::dsl

#endif
