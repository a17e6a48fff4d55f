#include "unitroot/residue.hpp"

#include <cctype>

namespace unitroot {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    std::uint64_t number() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected a number in p-adic digit string", i);
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > (std::uint64_t(1) << 62))
                throw ParseError("number too large in p-adic digit string", i);
            ++i;
        }
        return v;
    }
};

} // namespace

// Accepts the renderings produced by PadicDigits::to_string: a sum of terms
// "d", "p", "d*p", "p^j", "d*p^j" followed by "+ O(p^k)". The prime and
// precision are read off the O-term.
Residue parse_padic_string(const std::string& text) {
    Cursor c{text};
    struct Term {
        std::uint64_t coeff;
        std::uint64_t base = 0; // 0 when the term is a bare constant
        std::uint64_t exp = 1;
    };
    std::vector<Term> terms;
    while (true) {
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == 'O') break;
        Term t{1, 0, 1};
        std::uint64_t first = c.number();
        if (c.eat('*')) {
            t.coeff = first;
            t.base = c.number();
            if (c.eat('^')) t.exp = c.number();
        } else if (c.eat('^')) {
            t.coeff = 1;
            t.base = first;
            t.exp = c.number();
        } else {
            t.coeff = first;
        }
        terms.push_back(t);
        if (!c.eat('+')) break;
    }
    c.skip_ws();
    if (!c.eat('O') || !c.eat('('))
        throw ParseError("expected O(p^k) precision marker", c.i);
    const std::uint64_t p64 = c.number();
    std::uint64_t k = 1;
    if (c.eat('^')) k = c.number();
    if (!c.eat(')')) throw ParseError("expected ')'", c.i);
    c.skip_ws();
    if (c.i != c.s.size()) throw ParseError("trailing input after O(...)", c.i);

    if (p64 < 2 || p64 > 0xffffffffu)
        throw ParseError("modulus base out of range", 0);
    const auto p = static_cast<std::uint32_t>(p64);
    Residue r = Residue::zero(p, static_cast<std::uint32_t>(k));
    for (const auto& t : terms) {
        if (t.base != 0 && t.base != p64)
            throw ParseError("digit term uses a base different from the O(...) prime", 0);
        Int v = Int(t.coeff);
        if (t.base != 0) v *= int_pow(Int(t.base), t.exp);
        r = r + Residue::reduce(v, p, static_cast<std::uint32_t>(k));
    }
    return r;
}

} // namespace unitroot
