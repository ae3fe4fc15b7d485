#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "eulersums/error.hpp"
#include "eulersums/rational.hpp"

namespace eulersums::detail {

// Shared token reader for the expression and sum grammars. Whitespace is skipped before every token.
class TextCursor {
public:
    explicit TextCursor(std::string_view text) : text_(text) {}

    std::size_t position() const noexcept { return pos_; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    bool looking_at(std::string_view token) {
        skip_space();
        return text_.substr(pos_, token.size()) == token;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    // Unsigned decimal integer; no whitespace inside.
    Integer integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    // Unsigned integer that must fit in an int and be at least `minimum`.
    int small_integer(int minimum, const char* what) {
        skip_space();
        const std::size_t start = pos_;
        const Integer value = integer();
        if (value < minimum || value > 1000000) {
            throw ParseError(std::string(what) + " out of range", start);
        }
        return value.convert_to<int>();
    }

    [[noreturn]] void fail(const std::string& message) {
        skip_space();
        if (pos_ >= text_.size()) {
            throw ParseError(message + ", found end of input", pos_);
        }
        throw ParseError(message + ", found '" + std::string(1, text_[pos_]) + "'", pos_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace eulersums::detail
