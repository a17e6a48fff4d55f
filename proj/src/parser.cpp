#include "unitroot/laurent.hpp"

#include <cctype>
#include <optional>

namespace unitroot {

namespace {

struct Token {
    enum Kind { Number, Name, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= s_.size()) {
            tok_.kind = Token::End;
            tok_.text.clear();
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Number, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Name, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
        tok_ = {k, std::string(1, c), i_};
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : lex_(text), vars_(vars) {}

    ZPoly run() {
        ZPoly f = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::End)
            throw ParseError("unexpected trailing input '" + t.text + "'", t.pos);
        return f;
    }

private:
    int nvars() const { return static_cast<int>(vars_.size()); }

    ZPoly expr() {
        ZPoly f = term();
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            Token op = lex_.take();
            ZPoly g = term();
            f = (op.kind == Token::Plus) ? f + g : f - g;
        }
        return f;
    }

    ZPoly term() {
        ZPoly f = factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            f = f * factor();
        }
        return f;
    }

    ZPoly factor() {
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            return factor().negated();
        }
        ZPoly f = primary();
        if (lex_.peek().kind == Token::Caret) {
            Token caret = lex_.take();
            std::int64_t e = exponent_literal();
            f = syntactic_power(f, e, caret.pos);
        }
        return f;
    }

    std::int64_t exponent_literal() {
        bool negative = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            negative = true;
        }
        Token t = lex_.take();
        if (t.kind != Token::Number)
            throw ParseError("expected integer exponent", t.pos);
        std::int64_t v = 0;
        for (char c : t.text) {
            v = v * 10 + (c - '0');
            if (v > (std::int64_t(1) << 32))
                throw ParseError("exponent too large", t.pos);
        }
        return negative ? -v : v;
    }

    ZPoly primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Number:
                return ZPoly::constant(ZRing{}, nvars(), Int(t.text));
            case Token::Name: {
                for (std::size_t i = 0; i < vars_.size(); ++i) {
                    if (vars_[i] == t.text) {
                        ExponentVector e(nvars(), 0);
                        e[i] = 1;
                        return ZPoly::monomial(ZRing{}, std::move(e), Int(1));
                    }
                }
                throw ParseError("unknown variable '" + t.text + "'", t.pos);
            }
            case Token::LParen: {
                ZPoly f = expr();
                const Token& close = lex_.peek();
                if (close.kind != Token::RParen)
                    throw ParseError("expected ')'", close.pos);
                lex_.take();
                return f;
            }
            default:
                throw ParseError("expected a number, variable or '('", t.pos);
        }
    }

    // x^-1 is a Laurent monomial; a negative exponent on anything that is
    // not a single monomial with coefficient +-1 has no polynomial meaning.
    ZPoly syntactic_power(const ZPoly& f, std::int64_t e, std::size_t pos) {
        if (e >= 0) {
            ZPoly r = ZPoly::constant(ZRing{}, nvars(), Int(1));
            for (std::int64_t i = 0; i < e; ++i) r = r * f;
            return r;
        }
        if (f.term_count() != 1)
            throw ParseError("negative exponent requires a monomial base", pos);
        const auto& [mono_e, c] = *f.terms().begin();
        if (c != 1 && c != -1)
            throw ParseError("negative exponent requires coefficient 1 or -1", pos);
        Int coeff = (e % 2 == 0) ? Int(1) : c;
        return ZPoly::monomial(ZRing{}, ev_scale(e, mono_e), coeff);
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
};

} // namespace

ZPoly parse_poly(const std::string& text, const std::vector<std::string>& variables) {
    if (variables.empty()) throw DomainError("at least one variable is required");
    for (std::size_t i = 0; i < variables.size(); ++i)
        for (std::size_t j = i + 1; j < variables.size(); ++j)
            if (variables[i] == variables[j])
                throw DomainError("duplicate variable name '" + variables[i] + "'");
    return Parser(text, variables).run();
}

std::string render_poly(const ZPoly& f, const std::vector<std::string>& variables) {
    if (static_cast<int>(variables.size()) != f.nvars())
        throw DomainError("variable list does not match polynomial arity");
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        const bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars_part;
        for (std::size_t i = 0; i < variables.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars_part.empty()) vars_part += "*";
            vars_part += variables[i];
            if (e[i] != 1) vars_part += "^" + std::to_string(e[i]);
        }
        if (vars_part.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += vars_part;
        }
    }
    return out;
}

} // namespace unitroot
