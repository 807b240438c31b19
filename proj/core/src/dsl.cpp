#include "anncoh/dsl.hpp"

#include <cctype>
#include <optional>

namespace anncoh {

namespace {

std::string describe(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found)
    : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": expected " +
            (expected.size() > 1 ? "one of " : "") + describe(expected) + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { Ident, Zero, One, Plus, Star, LParen, RParen, LBrace, RBrace, Semi, OPlus, OTimes, End, Bad };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string show(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Ident:
      return "identifier '" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t{Tok::End, "", line_, col_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t end = pos_;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
        t.kind = Tok::Ident;
        t.text = std::string(text_.substr(pos_, end - pos_));
        advance(end - pos_);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
        t.text = std::string(text_.substr(pos_, end - pos_));
        t.kind = t.text == "0" ? Tok::Zero : t.text == "1" ? Tok::One : Tok::Bad;
        advance(end - pos_);
      } else if (text_.substr(pos_, 3) == "(+)") {
        t.kind = Tok::OPlus;
        t.text = "(+)";
        advance(3);
      } else if (text_.substr(pos_, 3) == "(*)") {
        t.kind = Tok::OTimes;
        t.text = "(*)";
        advance(3);
      } else {
        t.text = std::string(1, c);
        switch (c) {
          case '+': t.kind = Tok::Plus; break;
          case '*': t.kind = Tok::Star; break;
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case '{': t.kind = Tok::LBrace; break;
          case '}': t.kind = Tok::RBrace; break;
          case ';': t.kind = Tok::Semi; break;
          default: t.kind = Tok::Bad; break;
        }
        advance(1);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance(1);
  }
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  ObjExpr expr() {
    ObjExpr acc = term();
    while (peek().kind == Tok::Plus) {
      next();
      acc = acc + term();
    }
    return acc;
  }

  std::vector<MorWord> path() {
    std::vector<MorWord> edges{sum()};
    while (peek().kind == Tok::Semi) {
      next();
      edges.push_back(sum());
    }
    return edges;
  }

  MorWord word() {
    auto edges = path();
    MorWord acc = edges.front();
    for (std::size_t i = 1; i < edges.size(); ++i) acc = MorWord::composite(edges[i], acc);
    return acc;
  }

  void expect_end(std::vector<std::string> expected) {
    if (peek().kind != Tok::End) fail(std::move(expected));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& peek2() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected), show(t));
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail({what});
    next();
  }

  ObjExpr term() {
    ObjExpr acc = factor();
    while (peek().kind == Tok::Star) {
      next();
      acc = acc * factor();
    }
    return acc;
  }

  ObjExpr factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        ObjExpr v = ObjExpr::var(t.text);
        next();
        return v;
      }
      case Tok::Zero:
        next();
        return ObjExpr::zero();
      case Tok::One:
        next();
        return ObjExpr::one();
      case Tok::LParen: {
        next();
        ObjExpr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        fail({"atom", "'0'", "'1'", "'('"});
    }
  }

  MorWord sum() {
    MorWord acc = prod();
    while (peek().kind == Tok::OPlus) {
      next();
      acc = MorWord::oplus(acc, prod());
    }
    return acc;
  }

  MorWord prod() {
    MorWord acc = unary();
    while (peek().kind == Tok::OTimes) {
      next();
      acc = MorWord::otimes(acc, unary());
    }
    return acc;
  }

  MorWord unary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      MorWord w = word();
      expect(Tok::RParen, "')'");
      return w;
    }
    if (t.kind == Tok::Ident && t.text == "inv" && peek2().kind == Tok::LParen) {
      next();
      next();
      MorWord w = word();
      expect(Tok::RParen, "')'");
      return MorWord::inverse(w);
    }
    if (t.kind == Tok::Ident) {
      if (auto gen = generator_from_keyword(t.text)) {
        next();
        expect(Tok::LBrace, "'{'");
        std::vector<ObjExpr> params{expr()};
        while (peek().kind == Tok::Semi) {
          next();
          params.push_back(expr());
        }
        if (peek().kind != Tok::RBrace) fail({"'+'", "'*'", "';'", "'}'"});
        const Token& close = peek();
        if (params.size() != arity(*gen)) {
          throw ParseError(close.line, close.column,
                           {std::to_string(arity(*gen)) + " parameter(s) for '" + std::string(keyword(*gen)) + "'"},
                           std::to_string(params.size()));
        }
        next();
        return MorWord::generator(*gen, std::move(params));
      }
    }
    fail({"generator", "'inv'", "'('"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ObjExpr parse_expr(std::string_view text) {
  Parser p(text);
  ObjExpr e = p.expr();
  p.expect_end({"'+'", "'*'", "end of input"});
  return e;
}

MorWord parse_word(std::string_view text) {
  Parser p(text);
  MorWord w = p.word();
  p.expect_end({"';'", "'(+)'", "'(*)'", "end of input"});
  return w;
}

std::vector<MorWord> parse_path(std::string_view text) {
  Parser p(text);
  auto edges = p.path();
  p.expect_end({"';'", "'(+)'", "'(*)'", "end of input"});
  return edges;
}

}  // namespace anncoh
