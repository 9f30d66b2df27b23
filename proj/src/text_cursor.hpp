#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "c2ka/error.hpp"

namespace c2ka::detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Position-tracking reader over a text buffer, shared by the hand-written parsers.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text, std::size_t line = 1, std::size_t column = 1)
      : text_(text), line_(line), column_(column) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  std::size_t pos() const { return pos_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  std::string_view text() const { return text_; }

  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  /// Skips whitespace and, when enabled, `#` comments running to end of line.
  void skip_space(bool hash_comments = false) {
    while (!eof()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else if (hash_comments && c == '#') {
        while (!eof() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    for (std::size_t i = 0; i < s.size(); ++i) get();
    return true;
  }

  std::string read_identifier() {
    std::string out;
    while (!eof() && is_ident_char(peek())) out.push_back(get());
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, line_, column_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace c2ka::detail
