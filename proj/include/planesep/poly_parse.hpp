#pragma once

#include <cctype>
#include <string>

#include "planesep/poly.hpp"

namespace planesep {

/// Recursive-descent parser for polynomial expressions over the given
/// variables. Grammar: rational literals ("3", "2/5"), variables, + - * ^
/// with nonnegative integer exponents, parentheses, unary minus.
class PolyParser {
  public:
    PolyParser(std::vector<std::string> vars, const std::string& src) : vars_(std::move(vars)), src_(src) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    std::vector<std::string> vars_;
    const std::string& src_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw input_error("E_SYNTAX",
                          "polynomial syntax error at column " + std::to_string(pos_ + 1) + ": " + msg +
                              " in \"" + src_ + "\"");
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Poly expr() {
        Poly acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected integer exponent");
            int e = std::stoi(src_.substr(start, pos_ - start));
            return poly_pow(b, e);
        }
        return b;
    }

    Poly base() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            std::string num = src_.substr(start, pos_ - start);
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                size_t dstart = pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
                if (pos_ == dstart) fail("expected denominator");
                std::string den = src_.substr(dstart, pos_ - dstart);
                auto r = parse_rat(num + "/" + den);
                if (!r) fail("bad rational literal");
                return Poly::constant(vars_, *r);
            }
            return Poly::constant(vars_, Rat(Int(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                    src_[pos_] == '\''))
                ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            for (const auto& v : vars_)
                if (v == name) return Poly::variable(vars_, name);
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected character");
    }
};

inline Poly parse_poly(const std::vector<std::string>& vars, const std::string& src) {
    return PolyParser(vars, src).parse();
}

}  // namespace planesep
