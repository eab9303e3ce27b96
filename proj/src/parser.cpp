#include "novlag/parser.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "novlag/error.hpp"

namespace novlag {

namespace {

enum class Tok {
    number,
    var,
    prime,
    caret,
    lparen,
    rparen,
    lbracket,
    rbracket,
    comma,
    plus,
    minus,
    star,
    slash,
    circ,
    end,
};

std::string describe(Tok t) {
    switch (t) {
        case Tok::number: return "number";
        case Tok::var: return "variable";
        case Tok::prime: return "'''";
        case Tok::caret: return "'^'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbracket: return "'['";
        case Tok::rbracket: return "']'";
        case Tok::comma: return "','";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::slash: return "'/'";
        case Tok::circ: return "'o'";
        case Tok::end: return "end of input";
    }
    return "token";
}

struct Token {
    Tok kind;
    std::string text;  // digits for number and var
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    const auto advance = [&] {
        if (src[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    const auto digits = [&] {
        std::string s;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
            s += src[i];
            advance();
        }
        return s;
    };

    while (i < src.size()) {
        const char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance();
            continue;
        }
        const std::size_t tl = line;
        const std::size_t tc = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            out.push_back({Tok::number, digits(), tl, tc});
            continue;
        }
        if (ch == 'x') {
            advance();
            std::string idx = digits();
            if (idx.empty()) throw ParseError("expected digits after 'x'", tl, tc);
            out.push_back({Tok::var, std::move(idx), tl, tc});
            continue;
        }
        Tok kind;
        switch (ch) {
            case '\'': kind = Tok::prime; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case '[': kind = Tok::lbracket; break;
            case ']': kind = Tok::rbracket; break;
            case ',': kind = Tok::comma; break;
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '/': kind = Tok::slash; break;
            case 'o': kind = Tok::circ; break;
            default:
                throw ParseError(std::string("unknown token '") + ch + "'", tl, tc);
        }
        advance();
        out.push_back({kind, {}, tl, tc});
    }
    out.push_back({Tok::end, {}, line, col});
    return out;
}

class ParserBase {
protected:
    explicit ParserBase(std::string_view src) : toks_(tokenize(src)) {}

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
    const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        throw ParseError(what + ", found " + describe(t.kind), t.line, t.column);
    }

    const Token& expect(Tok k) {
        if (!at(k)) fail("expected " + describe(k));
        return take();
    }

    int small_int(const Token& t, const char* what) const {
        if (t.text.size() > 6) throw ParseError(std::string(what) + " is too large", t.line, t.column);
        return std::stoi(t.text);
    }

    int var_index(const Token& t) const {
        const int k = small_int(t, "variable index");
        if (k < 1) throw ParseError("variable index must be >= 1", t.line, t.column);
        return k;
    }

    // ['-'] digits ['/' digits]
    bool at_rational() const { return at(Tok::number) || (at(Tok::minus) && at(Tok::number, 1)); }

    Rational rational() {
        bool negative = false;
        if (at(Tok::minus)) {
            take();
            negative = true;
        }
        const Token& num = expect(Tok::number);
        Rational q(Integer(num.text), Integer(1));
        if (at(Tok::slash)) {
            take();
            const Token& den = expect(Tok::number);
            Integer d(den.text);
            if (d == 0) throw ParseError("division by zero", den.line, den.column);
            q = Rational(Integer(num.text), d);
            q.canonicalize();
        }
        return negative ? Rational(-q) : q;
    }

    // '(' rational ')' as a scalar prefix.
    bool at_paren_rational() const {
        std::size_t k = 1;
        if (!at(Tok::lparen)) return false;
        if (at(Tok::minus, k)) ++k;
        if (!at(Tok::number, k)) return false;
        ++k;
        if (at(Tok::slash, k)) {
            if (!at(Tok::number, k + 1)) return false;
            k += 2;
        }
        return at(Tok::rparen, k);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

class DiffParser : ParserBase {
public:
    explicit DiffParser(std::string_view src) : ParserBase(src) {}

    DiffPoly parse() {
        DiffPoly p = expr();
        if (!at(Tok::end)) fail("unexpected input");
        return p;
    }

private:
    bool at_factor() const { return at(Tok::var) || at(Tok::lparen); }

    DiffPoly expr() {
        bool negative = false;
        if (at(Tok::plus) || (at(Tok::minus) && !at(Tok::number, 1))) negative = take().kind == Tok::minus;
        DiffPoly acc = term();
        if (negative) acc = -acc;
        while (at(Tok::plus) || at(Tok::minus)) {
            const bool minus = take().kind == Tok::minus;
            DiffPoly t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    DiffPoly term() {
        DiffPoly acc(Rational(1));
        bool any = false;
        if (at_rational()) {
            acc = DiffPoly(rational());
            any = true;
        }
        while (true) {
            if (any && at(Tok::star)) {
                take();
                if (!at_factor()) fail("expected a factor after '*'");
            }
            if (!at_factor()) break;
            acc = acc * factor();
            any = true;
        }
        if (!any) fail("expected a term");
        return acc;
    }

    DiffPoly factor() {
        if (at(Tok::lparen)) {
            take();
            DiffPoly inner = expr();
            expect(Tok::rparen);
            return power(inner);
        }
        const Token& v = expect(Tok::var);
        const int k = var_index(v);
        int order = 0;
        if (at(Tok::prime)) {
            while (at(Tok::prime)) {
                const Token& p = take();
                if (++order > 2) throw ParseError("write x" + v.text + "^(k) for derivatives of order >= 3", p.line, p.column);
            }
        } else if (at(Tok::caret) && at(Tok::lparen, 1)) {
            take();
            take();
            order = small_int(expect(Tok::number), "derivative order");
            expect(Tok::rparen);
        }
        return power(DiffPoly::variable(k, order));
    }

    DiffPoly power(const DiffPoly& base) {
        if (!at(Tok::caret)) return base;
        take();
        if (at(Tok::lparen)) fail("derivative order '^(k)' must follow a bare variable");
        const int e = small_int(expect(Tok::number), "exponent");
        DiffPoly out(Rational(1));
        for (int i = 0; i < e; ++i) out = out * base;
        return out;
    }
};

class NovParser : ParserBase {
public:
    explicit NovParser(std::string_view src) : ParserBase(src) {}

    NovExpr parse() {
        NovExpr e = expr();
        if (!at(Tok::end)) fail("unexpected input");
        return e;
    }

private:
    void reject_diff_syntax() const {
        if (at(Tok::prime) || at(Tok::caret)) {
            const Token& t = peek();
            throw ParseError("derivative notation is not allowed in nov mode", t.line, t.column);
        }
    }

    NovExpr expr() {
        std::vector<NovExpr> terms;
        bool negative = false;
        if (at(Tok::plus) || (at(Tok::minus) && !at(Tok::number, 1))) negative = take().kind == Tok::minus;
        terms.push_back(term(negative));
        while (at(Tok::plus) || at(Tok::minus)) {
            const bool minus = take().kind == Tok::minus;
            terms.push_back(term(minus));
        }
        if (terms.size() == 1) return std::move(terms.front());
        return NovExpr::sum(std::move(terms));
    }

    NovExpr term(bool negate) {
        std::optional<Rational> scalar;
        if (at_rational()) {
            scalar = rational();
        } else if (at_paren_rational()) {
            take();
            scalar = rational();
            expect(Tok::rparen);
        }
        if (scalar && at(Tok::star)) take();

        NovExpr acc = atom();
        while (at(Tok::star) || at(Tok::circ)) {
            const bool circ = take().kind == Tok::circ;
            NovExpr rhs = atom();
            acc = circ ? NovExpr::circ(std::move(acc), std::move(rhs))
                       : NovExpr::nov_prod(std::move(acc), std::move(rhs));
        }
        reject_diff_syntax();
        if (negate) scalar = scalar ? Rational(-*scalar) : Rational(-1);
        if (scalar) return NovExpr::scale(*scalar, std::move(acc));
        return acc;
    }

    NovExpr atom() {
        if (at(Tok::var)) {
            const int k = var_index(take());
            reject_diff_syntax();
            return NovExpr::gen(k);
        }
        if (at(Tok::lbracket)) {
            take();
            NovExpr a = expr();
            expect(Tok::comma);
            NovExpr b = expr();
            expect(Tok::rbracket);
            return NovExpr::lie(std::move(a), std::move(b));
        }
        if (at(Tok::lparen)) {
            take();
            NovExpr inner = expr();
            expect(Tok::rparen);
            reject_diff_syntax();
            return inner;
        }
        fail("expected a generator, '[' or '('");
    }
};

}  // namespace

DiffPoly parse_diff(std::string_view src) { return DiffParser(src).parse(); }

NovExpr parse_nov(std::string_view src) { return NovParser(src).parse(); }

}  // namespace novlag
