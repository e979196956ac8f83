#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "monreg/ideal.hpp"

namespace monreg {

namespace detail {

struct Cursor {
    std::string_view text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_spaces() {
        while (!done() && (peek() == ' ' || peek() == '\t')) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    int read_int() {
        skip_spaces();
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000) fail("number too large");
            advance();
        }
        return static_cast<int>(v);
    }
};

/// One monomial: `1` or `x<i>[^<e>]` factors joined by `*`.
inline Monomial parse_monomial(Cursor& c, int nvars) {
    c.skip_spaces();
    if (c.done()) c.fail("expected a monomial");
    if (c.peek() == '1') {
        c.advance();
        return Monomial::unit(nvars);
    }
    Monomial m(nvars);
    for (;;) {
        c.skip_spaces();
        if (c.done() || c.peek() != 'x') c.fail("expected a variable like x1");
        c.advance();
        int var = c.read_int();
        if (var < 1 || var > nvars) c.fail("unknown variable index x" + std::to_string(var));
        int e = 1;
        c.skip_spaces();
        if (!c.done() && c.peek() == '^') {
            c.advance();
            e = c.read_int();
        }
        m.set_exponent(var, m.exponent(var) + e);
        c.skip_spaces();
        if (!c.done() && c.peek() == '*') {
            c.advance();
            continue;
        }
        break;
    }
    return m;
}

}  // namespace detail

/// Parses one monomial from text such as `x1^2*x3`.
inline Monomial parse_monomial(std::string_view text, int nvars) {
    detail::Cursor c{text};
    Monomial m = detail::parse_monomial(c, nvars);
    c.skip_spaces();
    if (!c.done()) c.fail("trailing characters after monomial");
    return m;
}

/// Parses a comma-separated generator list, e.g. `x1^2, x1*x2`.
inline MonomialIdeal parse_generators(std::string_view text, int nvars) {
    detail::Cursor c{text};
    std::vector<Monomial> gens;
    c.skip_spaces();
    if (!c.done()) {
        for (;;) {
            gens.push_back(detail::parse_monomial(c, nvars));
            c.skip_spaces();
            if (!c.done() && c.peek() == ',') {
                c.advance();
                continue;
            }
            break;
        }
    }
    c.skip_spaces();
    if (!c.done()) c.fail("trailing characters after generator list");
    return MonomialIdeal::make(nvars, gens);
}

/// Ideal text format: a `vars: n` header, then one monomial per line.
/// `#` starts a comment; blank lines are ignored. The zero ideal is a header
/// with no generators; the unit ideal is a single line `1`.
inline MonomialIdeal parse_ideal(std::string_view text) {
    detail::Cursor c{text};
    int nvars = -1;
    std::vector<Monomial> gens;
    while (!c.done()) {
        c.skip_spaces();
        if (c.done()) break;
        if (c.peek() == '\n' || c.peek() == '\r') {
            c.advance();
            continue;
        }
        if (c.peek() == '#') {
            while (!c.done() && c.peek() != '\n') c.advance();
            continue;
        }
        if (nvars < 0) {
            // header
            static constexpr std::string_view kHeader = "vars:";
            for (char want : kHeader) {
                if (c.done() || c.peek() != want) c.fail("expected `vars: n` header");
                c.advance();
            }
            nvars = c.read_int();
            if (nvars < 0 || nvars > kMaxVars) c.fail("variable count out of range [0, 16]");
        } else {
            gens.push_back(detail::parse_monomial(c, nvars));
        }
        c.skip_spaces();
        if (!c.done() && c.peek() == '#') {
            while (!c.done() && c.peek() != '\n') c.advance();
        }
        if (!c.done() && c.peek() == '\r') c.advance();
        if (!c.done()) {
            if (c.peek() != '\n') c.fail("trailing characters on line");
            c.advance();
        }
    }
    if (nvars < 0) detail::Cursor{text}.fail("missing `vars: n` header");
    return MonomialIdeal::make(nvars, gens);
}

inline MonomialIdeal read_ideal(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ideal(buf.str());
}

/// Canonical serialization; parse_ideal(serialize_ideal(I)) == I and equal
/// ideals serialize to identical bytes.
inline std::string serialize_ideal(const MonomialIdeal& I) {
    std::string out = "vars: " + std::to_string(I.vars()) + "\n";
    for (const auto& g : I.generators()) {
        out += g.str();
        out += '\n';
    }
    return out;
}

}  // namespace monreg
