#include <catch_amalgamated.hpp>

#include <algorithm>

#include "anncoh/coherence.hpp"
#include "anncoh/dsl.hpp"
#include "support.hpp"

using namespace anncoh;
using support::v;

TEST_CASE("parse_expr examples", "[dsl]") {
  CHECK(parse_expr("x*(y+z)") == v("x") * (v("y") + v("z")));
  CHECK(parse_expr("x + y*z") == v("x") + v("y") * v("z"));
  CHECK(parse_expr("x + y + z") == (v("x") + v("y")) + v("z"));
  CHECK(parse_expr("x*y*z") == (v("x") * v("y")) * v("z"));
  CHECK(parse_expr(" 0 + 1 ") == ObjExpr::zero() + ObjExpr::one());
  CHECK(parse_expr("_a1*B") == v("_a1") * v("B"));
}

TEST_CASE("parse_word examples", "[dsl]") {
  const auto c = parse_word("c{x;y} ; c{y;x}");
  REQUIRE(c.kind() == WordKind::Comp);
  CHECK(c.outer() == MorWord::c(v("y"), v("x")));
  CHECK(c.inner() == MorWord::c(v("x"), v("y")));

  const auto prec = parse_word("id{x} (+) id{y} (*) id{z} ; inv(c{x;y})");
  REQUIRE(prec.kind() == WordKind::Comp);
  REQUIRE(prec.inner().kind() == WordKind::OPlus);
  CHECK(prec.inner().rhs().kind() == WordKind::OTimes);
  CHECK(prec.outer().kind() == WordKind::Inv);

  CHECK(parse_word("(c{x;y} ; c{y;x}) (+) id{z}").kind() == WordKind::OPlus);
  CHECK(parse_word("distL{x + y;z*w;1}").params()[0] == v("x") + v("y"));
  for (const char* g : {"id{x}", "c{x;y}", "assocP{x;y;z}", "g{x}", "d{x}", "assocT{x;y;z}", "lu{x}", "ru{x}",
                        "distL{x;y;z}", "distR{x;y;z}", "lhat{x}", "rhat{x}"}) {
    CHECK(to_string(parse_word(g)) == g);
  }
}

TEST_CASE("parse_path splits top-level edges", "[dsl]") {
  const auto edges = parse_path("c{x;y} ; (c{y;x} ; id{x + y}) ; id{x + y}");
  REQUIRE(edges.size() == 3);
  CHECK(edges[0] == MorWord::c(v("x"), v("y")));
  CHECK(edges[1].kind() == WordKind::Comp);
}

TEST_CASE("parse errors carry position and expectation", "[dsl]") {
  try {
    parse_expr("x+*y");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 1);
    CHECK(err.column() == 3);
    CHECK(err.found() == "'*'");
    CHECK(std::find(err.expected().begin(), err.expected().end(), "atom") != err.expected().end());
  }
  try {
    parse_word("c{x;y}\n ; c{y}");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
    CHECK(err.column() == 7);
  }
  CHECK_THROWS_AS(parse_expr("x y"), ParseError);
  CHECK_THROWS_AS(parse_expr("(x + y"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_word("foo{x}"), ParseError);
  CHECK_THROWS_AS(parse_word("c{x}"), ParseError);
  CHECK_THROWS_AS(parse_word("inv c{x;y}"), ParseError);
  CHECK_THROWS_AS(parse_expr("x $ y"), ParseError);
}

TEST_CASE("expressions round-trip through the printer", "[dsl][property]") {
  for (const auto& y : support::up_to_leaves(4, {"x", "y"})) {
    const std::string text = to_string(y);
    const ObjExpr back = parse_expr(text);
    REQUIRE(back == y);
    REQUIRE(to_string(back) == text);
  }
}

TEST_CASE("words round-trip through the printer", "[dsl][property]") {
  std::size_t checked = 0;
  for (const auto& y : enumerate_expressions(3, 3)) {
    for (auto mode : {Mode::QuiteStrict, Mode::General}) {
      for (const auto& p : enumerate_paths(y, mode, 2)) {
        for (const auto& word : {p.word, inv(p.word), oplus(p.word, inv(p.word)), otimes(p.word, p.word)}) {
          const std::string text = to_string(word);
          const MorWord back = parse_word(text);
          REQUIRE(back == word);
          REQUIRE(to_string(back) == text);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 1000);
}
