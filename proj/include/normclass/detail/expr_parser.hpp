#pragma once

// Recursive-descent parser for the shared arithmetic grammar
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power)*
//   power  := atom ['^' unsigned]
//   atom   := number | identifier | '(' expr ')'
// No implicit multiplication. The value type supplies ring operations;
// division is delegated to a callback so callers can restrict it.

#include "normclass/errors.hpp"

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

namespace normclass::detail {

template <class Value>
class ExprParser {
public:
    using LeafFn = std::function<Value(std::string_view identifier)>;
    using NumberFn = std::function<Value(std::string_view digits)>;
    using DivideFn = std::function<Value(const Value&, const Value&)>;
    using PowFn = std::function<Value(const Value&, unsigned)>;

    ExprParser(std::string_view text, NumberFn number, LeafFn leaf, DivideFn divide, PowFn pow)
        : text_(text), number_(std::move(number)), leaf_(std::move(leaf)),
          divide_(std::move(divide)), pow_(std::move(pow)) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                         std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        Value acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    Value term() {
        Value acc = power();
        for (;;) {
            if (accept('*')) acc = acc * power();
            else if (accept('/')) acc = divide_(acc, power());
            else return acc;
        }
    }

    Value power() {
        Value base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            if (pos_ - start > 4) fail("exponent too large");
            return pow_(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Value atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return number_(text_.substr(start, pos_ - start));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string_view id = text_.substr(start, pos_ - start);
            return leaf_(id);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    NumberFn number_;
    LeafFn leaf_;
    DivideFn divide_;
    PowFn pow_;
};

} // namespace normclass::detail
