#include "homsum/dsl.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace homsum::dsl {

namespace {

enum class TokenKind {
    lparen,
    rparen,
    comma,
    star,
    caret,
    wedge,
    hash,
    sigma,
    atom_sphere,
    atom_cp,
    atom_moore,
    atom_ss,
    fn_punct,
    fn_halfsmash,
    number,
    end,
};

struct Token {
    TokenKind kind;
    SourceSpan span;
    Int value;  // number tokens only
};

std::vector<Token> lex(std::string_view text)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        auto single = [&](TokenKind k) {
            tokens.push_back({k, {start, start + 1}, 0});
            ++i;
        };
        if (c == '(') {
            single(TokenKind::lparen);
        } else if (c == ')') {
            single(TokenKind::rparen);
        } else if (c == ',') {
            single(TokenKind::comma);
        } else if (c == '*') {
            single(TokenKind::star);
        } else if (c == '^') {
            single(TokenKind::caret);
        } else if (c == '#') {
            single(TokenKind::hash);
        } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                   (c == '-' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            std::size_t j = i + 1;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            tokens.push_back({TokenKind::number, {start, j},
                              Int(std::string(text.substr(start, j - start)))});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && std::isalpha(static_cast<unsigned char>(text[j])))
                ++j;
            const std::string_view word = text.substr(start, j - start);
            TokenKind kind;
            if (word == "S")
                kind = TokenKind::atom_sphere;
            else if (word == "CP")
                kind = TokenKind::atom_cp;
            else if (word == "M")
                kind = TokenKind::atom_moore;
            else if (word == "SS")
                kind = TokenKind::atom_ss;
            else if (word == "punct")
                kind = TokenKind::fn_punct;
            else if (word == "halfsmash")
                kind = TokenKind::fn_halfsmash;
            else if (word == "Sigma")
                kind = TokenKind::sigma;
            else if (word == "v")
                kind = TokenKind::wedge;
            else
                throw ParseError("unknown name '" + std::string(word) + "'", {start, j});
            tokens.push_back({kind, {start, j}, 0});
            i = j;
        } else if (static_cast<unsigned char>(c) == 0xCE && i + 1 < n &&
                   static_cast<unsigned char>(text[i + 1]) == 0xA3) {
            // Unicode capital sigma, accepted on input only.
            tokens.push_back({TokenKind::sigma, {start, start + 2}, 0});
            i += 2;
        } else {
            throw ParseError("unexpected character", {start, start + 1});
        }
    }
    tokens.push_back({TokenKind::end, {n, n}, 0});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    SpaceExpr parse()
    {
        SpaceExpr e = parse_sum_or_wedge();
        if (peek().kind != TokenKind::end)
            throw ParseError("unexpected trailing input", peek().span);
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token advance() { return tokens_[pos_++]; }

    Token expect(TokenKind kind, const char* what)
    {
        if (peek().kind != kind)
            throw ParseError(std::string("expected ") + what, peek().span);
        return advance();
    }

    // Dimension-like atom arguments; keeps chain models from exploding.
    static constexpr long long kMaxDimension = 10000;

    int small_arg(const Token& tok, long long min, const char* what)
    {
        if (tok.value < min)
            throw ParseError(std::string(what) + " must be >= " + std::to_string(min), tok.span);
        if (tok.value > kMaxDimension)
            throw ParseError(std::string(what) + " is too large", tok.span);
        return static_cast<int>(tok.value);
    }

    // 'v' and '#' share the lowest level and refuse to mix unparenthesized.
    SpaceExpr parse_sum_or_wedge()
    {
        SpaceExpr lhs = parse_smash();
        if (peek().kind != TokenKind::wedge && peek().kind != TokenKind::hash)
            return lhs;
        const TokenKind family = peek().kind;
        while (peek().kind == TokenKind::wedge || peek().kind == TokenKind::hash) {
            if (peek().kind != family)
                throw ParseError("'v' and '#' cannot mix without parentheses", peek().span);
            const Token op = advance();
            SpaceExpr rhs = parse_smash();
            try {
                lhs = family == TokenKind::wedge
                          ? SpaceExpr::wedge(std::move(lhs), std::move(rhs))
                          : SpaceExpr::connected_sum(std::move(lhs), std::move(rhs));
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what(), op.span);
            }
        }
        return lhs;
    }

    SpaceExpr parse_smash()
    {
        SpaceExpr lhs = parse_product();
        while (peek().kind == TokenKind::caret) {
            advance();
            lhs = SpaceExpr::smash(std::move(lhs), parse_product());
        }
        return lhs;
    }

    SpaceExpr parse_product()
    {
        SpaceExpr lhs = parse_unary();
        while (peek().kind == TokenKind::star) {
            advance();
            lhs = SpaceExpr::product(std::move(lhs), parse_unary());
        }
        return lhs;
    }

    SpaceExpr parse_unary()
    {
        if (peek().kind == TokenKind::sigma) {
            advance();
            return SpaceExpr::suspension(parse_unary());
        }
        return parse_primary();
    }

    SpaceExpr parse_primary()
    {
        const Token tok = advance();
        switch (tok.kind) {
        case TokenKind::atom_sphere: {
            expect(TokenKind::lparen, "'('");
            const Token arg = expect(TokenKind::number, "a dimension");
            expect(TokenKind::rparen, "')'");
            return SpaceExpr::sphere(small_arg(arg, 1, "sphere dimension"));
        }
        case TokenKind::atom_cp: {
            expect(TokenKind::lparen, "'('");
            const Token arg = expect(TokenKind::number, "an index");
            expect(TokenKind::rparen, "')'");
            return SpaceExpr::cp(small_arg(arg, 1, "CP index"));
        }
        case TokenKind::atom_moore: {
            expect(TokenKind::lparen, "'('");
            const Token n = expect(TokenKind::number, "a cell dimension");
            expect(TokenKind::comma, "','");
            const Token k = expect(TokenKind::number, "an attaching degree");
            expect(TokenKind::rparen, "')'");
            if (k.value < 1)
                throw ParseError("Moore attaching degree must be >= 1", k.span);
            return SpaceExpr::moore(small_arg(n, 3, "Moore cell dimension"), k.value);
        }
        case TokenKind::atom_ss: {
            expect(TokenKind::lparen, "'('");
            const Token arg = expect(TokenKind::number, "a summand count");
            expect(TokenKind::rparen, "')'");
            return SpaceExpr::sigma_sigma(small_arg(arg, 0, "SS summand count"));
        }
        case TokenKind::fn_punct: {
            expect(TokenKind::lparen, "'('");
            SpaceExpr child = parse_sum_or_wedge();
            const Token close = expect(TokenKind::rparen, "')'");
            try {
                return SpaceExpr::punctured(std::move(child));
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what(), {tok.span.start, close.span.end});
            }
        }
        case TokenKind::fn_halfsmash: {
            expect(TokenKind::lparen, "'('");
            SpaceExpr base = parse_sum_or_wedge();
            expect(TokenKind::comma, "','");
            SpaceExpr fiber = parse_sum_or_wedge();
            expect(TokenKind::rparen, "')'");
            return SpaceExpr::half_smash(std::move(base), std::move(fiber));
        }
        case TokenKind::lparen: {
            SpaceExpr inner = parse_sum_or_wedge();
            expect(TokenKind::rparen, "')'");
            return inner;
        }
        default:
            throw ParseError("expected an expression", tok.span);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

int level(SpaceExpr::Kind kind)
{
    switch (kind) {
    case SpaceExpr::Kind::wedge:
    case SpaceExpr::Kind::connected_sum:
        return 1;
    case SpaceExpr::Kind::smash:
        return 2;
    case SpaceExpr::Kind::product:
        return 3;
    case SpaceExpr::Kind::suspension:
        return 4;
    default:
        return 5;
    }
}

std::string print_node(const SpaceExpr& e);

std::string infix_child(const SpaceExpr& child, const SpaceExpr& parent, bool right)
{
    const int pl = level(parent.kind());
    const int cl = level(child.kind());
    const bool parens = cl < pl || (cl == pl && (right || child.kind() != parent.kind()));
    const std::string text = print_node(child);
    return parens ? "(" + text + ")" : text;
}

std::string print_node(const SpaceExpr& e)
{
    using Kind = SpaceExpr::Kind;
    switch (e.kind()) {
    case Kind::sphere:
        return "S(" + std::to_string(e.param()) + ")";
    case Kind::cp:
        return "CP(" + std::to_string(e.param()) + ")";
    case Kind::moore:
        return "M(" + std::to_string(e.param()) + "," + e.order().str() + ")";
    case Kind::sigma_sigma:
        return "SS(" + std::to_string(e.param()) + ")";
    case Kind::product:
        return infix_child(e.child(0), e, false) + " * " + infix_child(e.child(1), e, true);
    case Kind::wedge:
        return infix_child(e.child(0), e, false) + " v " + infix_child(e.child(1), e, true);
    case Kind::smash:
        return infix_child(e.child(0), e, false) + " ^ " + infix_child(e.child(1), e, true);
    case Kind::connected_sum:
        return infix_child(e.child(0), e, false) + " # " + infix_child(e.child(1), e, true);
    case Kind::suspension: {
        const std::string inner = print_node(e.child(0));
        return level(e.child(0).kind()) < 4 ? "Sigma (" + inner + ")" : "Sigma " + inner;
    }
    case Kind::punctured:
        return "punct(" + print_node(e.child(0)) + ")";
    case Kind::half_smash:
        return "halfsmash(" + print_node(e.child(0)) + ", " + print_node(e.child(1)) + ")";
    }
    throw std::logic_error("print: unhandled node kind");
}

}  // namespace

SpaceExpr parse(std::string_view text)
{
    return Parser(text).parse();
}

std::string print(const SpaceExpr& e)
{
    return print_node(e);
}

}  // namespace homsum::dsl
