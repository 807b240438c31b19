#pragma once

// Text syntax for expressions and morphism words.
//
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := ident | '0' | '1' | '(' expr ')'
//
//   word   := sum (';' sum)*          -- f ; g is g after f
//   sum    := prod ('(+)' prod)*
//   prod   := unary ('(*)' unary)*
//   unary  := 'inv' '(' word ')' | gen '{' expr (';' expr)* '}' | '(' word ')'
//
// Generator keywords are listed by anncoh::keyword(). The printers
// to_string(ObjExpr) and to_string(MorWord) produce text these parsers
// read back to a structurally equal value.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "anncoh/expr.hpp"
#include "anncoh/morphism.hpp"

namespace anncoh {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found);

  /// 1-based position of the offending token.
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string found_;
};

ObjExpr parse_expr(std::string_view text);

/// Parses without type-checking; see validate().
MorWord parse_word(std::string_view text);

/// The top-level `;`-separated edges of a word, first edge first.
std::vector<MorWord> parse_path(std::string_view text);

}  // namespace anncoh
