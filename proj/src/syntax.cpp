#include "hmalab/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace hmalab {

SyntaxError::SyntaxError(const std::string& message, SourceSpan span)
    : std::runtime_error(message + " at " + std::to_string(span.start) + ".." + std::to_string(span.end)),
      span_(span) {}

namespace {

enum class Tok { lparen, rparen, cond_open, cond_close, land, lor, lnot, top, bottom, ident, end };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto two = [&](std::string_view op) { return s.substr(i, 2) == op; };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        auto push = [&](Tok k, std::size_t len) {
            out.push_back({k, std::string(s.substr(start, len)), {start, start + len}});
            i += len;
        };
        if (two("<|")) push(Tok::cond_open, 2);
        else if (two("|>")) push(Tok::cond_close, 2);
        else if (two("&&")) push(Tok::land, 2);
        else if (two("||")) push(Tok::lor, 2);
        else if (c == '!') push(Tok::lnot, 1);
        else if (c == '(') push(Tok::lparen, 1);
        else if (c == ')') push(Tok::rparen, 1);
        else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            const auto word = s.substr(i, j - i);
            if (word == "T") push(Tok::top, 1);
            else if (word == "F") push(Tok::bottom, 1);
            else if (Atom::valid_name(word)) push(Tok::ident, j - i);
            else throw SyntaxError("invalid identifier '" + std::string(word) + "'", {start, j});
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", {start, start + 1});
        }
    }
    out.push_back({Tok::end, "", {s.size(), s.size()}});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Term parse() {
        Term t = term();
        if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
        return t;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(peek().kind == Tok::end ? msg + " (end of input)" : msg, peek().span);
    }

    Term term() { return or_expr(); }

    Term or_expr() {
        Term t = and_expr();
        while (accept(Tok::lor)) t = lor(std::move(t), and_expr());
        return t;
    }

    Term and_expr() {
        Term t = not_expr();
        while (accept(Tok::land)) t = land(std::move(t), not_expr());
        return t;
    }

    Term not_expr() {
        if (accept(Tok::lnot)) return lnot(not_expr());
        return cond();
    }

    Term cond() {
        Term lhs = primary();
        if (!accept(Tok::cond_open)) return lhs;
        Term centre = term();
        if (!accept(Tok::cond_close)) fail("expected '|>'");
        Term rhs = primary();
        if (peek().kind == Tok::cond_open) fail("nested conditional must be parenthesized");
        return Term::cond(std::move(lhs), std::move(centre), std::move(rhs));
    }

    Term primary() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::top: next(); return Term::top();
            case Tok::bottom: next(); return Term::bottom();
            case Tok::ident: next(); return Term::atom(tok.text);
            case Tok::lparen: {
                next();
                Term t = term();
                if (!accept(Tok::rparen)) fail("expected ')'");
                return t;
            }
            default: fail(tok.kind == Tok::end ? "expected a term" : "unexpected '" + tok.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

bool composite(const Term& t) { return t.is_cond(); }

std::string print_ternary(const Term& t);
std::string print_sugared(const Term& t);

std::string wrap(const Term& t, std::string (*printer)(const Term&)) {
    return composite(t) ? "(" + printer(t) + ")" : printer(t);
}

std::string print_leaf(const Term& t) {
    if (t.is_true()) return "T";
    if (t.is_false()) return "F";
    return t.atom().name();
}

std::string print_ternary(const Term& t) {
    if (!t.is_cond()) return print_leaf(t);
    return wrap(t.then_branch(), print_ternary) + " <| " + wrap(t.condition(), print_ternary) + " |> " +
           wrap(t.else_branch(), print_ternary);
}

std::string print_sugared(const Term& t) {
    if (!t.is_cond()) return print_leaf(t);
    const Term& x = t.then_branch();
    const Term& y = t.condition();
    const Term& z = t.else_branch();
    if (z.is_false()) return wrap(y, print_sugared) + " && " + wrap(x, print_sugared);
    if (x.is_true()) return wrap(y, print_sugared) + " || " + wrap(z, print_sugared);
    if (x.is_false() && z.is_true()) return "!" + wrap(y, print_sugared);
    return wrap(x, print_sugared) + " <| " + wrap(y, print_sugared) + " |> " + wrap(z, print_sugared);
}

}  // namespace

Term parse_term(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string print_term(const Term& t, PrintStyle style) {
    return style == PrintStyle::ternary ? print_ternary(t) : print_sugared(t);
}

}  // namespace hmalab
