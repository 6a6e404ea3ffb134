#pragma once

// Exact parser for polynomial expressions over the coefficient field.
//
// Grammar (whitespace-insensitive):
//   expression := ['+'|'-'] term ( ('+'|'-') term )*
//   term       := factor ( '*' factor )*
//   factor     := atom [ '^' natural ]
//   atom       := '(' expression ')' | variable | 'eps' | 'i' | natural
//   variable   := 'w' | 'x' | 'y' | 'z' | 'v'
//
// 'eps' is the primitive cube root of unity and 'i' the imaginary unit, so
// for example "eps^2 + eps + 1" parses to the zero polynomial.  Errors carry
// the zero-based offset into the input text.

#include <cctype>
#include <stdexcept>
#include <string>

#include "mpoly.hpp"

namespace minsing {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)),
          position(pos) {}
};

namespace detail {

class PolyParser {
  public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    MPoly parse() {
        MPoly p = expression();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    MPoly expression() {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (get() == '-');
        MPoly p = term();
        if (negate) p = p.scaled(AlgNum(-1));
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') return p;
            get();
            MPoly t = term();
            p = c == '+' ? p + t : p - t;
        }
    }

    MPoly term() {
        MPoly p = factor();
        for (;;) {
            skip_space();
            if (peek() != '*') return p;
            get();
            p *= factor();
        }
    }

    MPoly factor() {
        MPoly p = atom();
        skip_space();
        if (peek() == '^') {
            get();
            skip_space();
            size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected an exponent", at);
            p = p.pow(natural());
        }
        return p;
    }

    MPoly atom() {
        skip_space();
        size_t at = pos_;
        char c = peek();
        if (c == '(') {
            get();
            MPoly p = expression();
            skip_space();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            get();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return MPoly(AlgNum(long(natural())));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek()))) name += get();
            if (name == "eps") return MPoly(AlgNum::eps());
            if (name == "i") return MPoly(AlgNum::i());
            if (name.size() == 1 && std::string("wxyzv").find(name) !=
                                        std::string::npos)
                return MPoly::var(name);
            throw ParseError("unknown identifier '" + name + "'", at);
        }
        throw ParseError(c == '\0' ? "unexpected end of input"
                                   : std::string("unexpected character '") +
                                         c + "'",
                         at);
    }

    int natural() {
        long n = 0;
        size_t at = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            n = n * 10 + (get() - '0');
            if (n > 1000000)
                throw ParseError("number too large", at);
        }
        return int(n);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(
                                          static_cast<unsigned char>(
                                              text_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace detail

inline MPoly parse_poly(const std::string& text) {
    return detail::PolyParser(text).parse();
}

}  // namespace minsing
