#include <cctype>

#include "reesdeg/polynomial.hpp"

namespace reesdeg {

namespace {

// Recursive-descent parser for the polynomial grammar:
//   expr   := ['-'|'+'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' nat]
//   atom   := ident | nat | '(' expr ')'
class Parser {
public:
    Parser(RingPtr ring, const std::string& text)
        : ring_(std::move(ring)), text_(text) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        char c = peek();
        if (c == '-' || c == '+') {
            neg = c == '-';
            ++pos_;
        }
        Polynomial p = term();
        if (neg) p = -p;
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Polynomial q = term();
                p = (c == '+') ? p + q : p - q;
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p = p * factor();
            } else if (c == '/') {
                size_t at = pos_;
                ++pos_;
                Polynomial q = factor();
                auto r = p.try_exact_div(q);
                if (!r) throw ParseError("non-exact division", at);
                p = *r;
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial factor() {
        Polynomial p = atom();
        if (peek() == '^') {
            size_t at = pos_;
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("exponent must be a natural number", at);
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (e > 100000) throw ParseError("exponent too large", at);
                ++pos_;
            }
            p = p.pow(e);
        }
        return p;
    }

    Polynomial atom() {
        char c = peek();
        size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            return Polynomial::constant(ring_, Rational(Integer(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            name += text_[pos_++];
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
                name += text_[pos_++];
            int i = ring_->var_index(name);
            if (i < 0) throw ParseError("unknown variable '" + name + "'", at);
            return Polynomial::variable(ring_, i);
        }
        throw ParseError("expected a variable, number or '('", at);
    }

    RingPtr ring_;
    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return Parser(ring, text).parse();
}

}  // namespace reesdeg
