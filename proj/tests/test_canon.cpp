#include <catch_amalgamated.hpp>

#include <array>

#include "anncoh/canon.hpp"
#include "anncoh/coherence.hpp"
#include "anncoh/dsl.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace anncoh;
using support::indexed;
using support::v;
using support::vars;

namespace {

ObjExpr e(const char* text) { return parse_expr(text); }

Permutation den(const MorWord& w) {
  const auto d = denote(w, Mode::QuiteStrict);
  return d.perm;
}

std::size_t count_generators(const MorWord& w, GenKind kind) {
  switch (w.kind()) {
    case WordKind::Gen:
      return w.gen_kind() == kind ? 1 : 0;
    case WordKind::Comp:
      return count_generators(w.outer(), kind) + count_generators(w.inner(), kind);
    case WordKind::OPlus:
    case WordKind::OTimes:
      return count_generators(w.lhs(), kind) + count_generators(w.rhs(), kind);
    case WordKind::Inv:
      return count_generators(w.operand(), kind);
  }
  return 0;
}

constexpr std::array<GenKind, 2> kSymmetric{GenKind::C, GenKind::Id};
constexpr std::array<WordKind, 2> kSymmetricCombinators{WordKind::OPlus, WordKind::Comp};
constexpr std::array<GenKind, 3> kExpansionGenerators{GenKind::Id, GenKind::DistL, GenKind::LHat};
constexpr std::array<WordKind, 3> kExpansionCombinators{WordKind::OPlus, WordKind::OTimes, WordKind::Comp};

}  // namespace

TEST_CASE("canonical_sum examples", "[canon]") {
  CHECK(canonical_sum({}) == ObjExpr::zero());
  const auto one = vars({"x"});
  CHECK(canonical_sum(one) == v("x"));
  const auto three = vars({"x", "y", "z"});
  CHECK(canonical_sum(three) == e("(x + y) + z"));
}

TEST_CASE("interchange examples", "[canon]") {
  const auto a1 = indexed("a", 1);
  const auto b1 = indexed("b", 1);
  const auto single = interchange_word(a1, b1);
  CHECK(single.kind() == WordKind::Gen);
  CHECK(single.gen_kind() == GenKind::Id);

  const auto a2 = indexed("a", 2);
  const auto b2 = indexed("b", 2);
  CHECK(den(interchange_word(a2, b2)) == Permutation{0, 2, 1, 3});
  const auto a3 = indexed("a", 3);
  const auto b3 = indexed("b", 3);
  CHECK(den(interchange_word(a3, b3)) == Permutation{0, 2, 4, 1, 3, 5});
  CHECK_THROWS_AS(interchange_word(a2, b3), ShapeMismatch);
}

TEST_CASE("interchange agrees with name matching", "[canon][property]") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto as = indexed("a", n);
    const auto bs = indexed("b", n);
    const auto w = interchange_word(as, bs);
    REQUIRE(only_uses(w, kSymmetric, kSymmetricCombinators));
    std::vector<ObjExpr> pairs;
    for (std::size_t i = 0; i < n; ++i) pairs.push_back(as[i] + bs[i]);
    REQUIRE(strict_equal(w.source(), canonical_sum(as) + canonical_sum(bs), Mode::QuiteStrict));
    REQUIRE(strict_equal(w.target(), canonical_sum(pairs), Mode::QuiteStrict));
    const auto d = denote(w, Mode::QuiteStrict);
    REQUIRE(d.perm == *oracle::match_by_name(d.src, d.dst));
  }
}

TEST_CASE("transpose examples", "[canon]") {
  const auto x = vars({"x", "y", "z"});
  CHECK(transpose_word(1, 3, x).gen_kind() == GenKind::Id);
  const std::vector<ObjExpr> grid22{e("a1*b1"), e("a1*b2"), e("a2*b1"), e("a2*b2")};
  CHECK(den(transpose_word(2, 2, grid22)) == Permutation{0, 2, 1, 3});
  const std::vector<ObjExpr> grid23{e("a1*b1"), e("a1*b2"), e("a1*b3"), e("a2*b1"), e("a2*b2"), e("a2*b3")};
  CHECK(den(transpose_word(2, 3, grid23)) == Permutation{0, 2, 4, 1, 3, 5});
  CHECK_THROWS_AS(transpose_word(2, 2, x), ShapeMismatch);
}

TEST_CASE("transpose agrees with the index transpose", "[canon][property]") {
  for (std::size_t rows = 0; rows <= 4; ++rows) {
    for (std::size_t cols = 0; cols <= 4; ++cols) {
      std::vector<ObjExpr> entries;
      for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(ObjExpr::var("e" + std::to_string(i)));
      const auto w = transpose_word(rows, cols, entries);
      REQUIRE(only_uses(w, kSymmetric, kSymmetricCombinators));
      REQUIRE(den(w) == oracle::transpose(rows, cols));
    }
  }
}

TEST_CASE("distribute examples", "[canon]") {
  const auto x = vars({"x"});
  const std::vector<ObjExpr> none;
  const auto lh = distribute_word(x, none);
  REQUIRE(lh.kind() == WordKind::Gen);
  CHECK(lh.gen_kind() == GenKind::LHat);
  CHECK(lh.params()[0] == v("x"));

  const auto yz = vars({"y", "z"});
  const auto f = distribute_word(x, yz);
  CHECK(count_generators(f, GenKind::DistL) == 1);
  CHECK(f.source() == e("x*(y + z)"));
  CHECK(perm::is_identity(den(f)));

  const auto a = indexed("a", 2);
  const auto b = indexed("b", 2);
  const auto big = denote(distribute_word(a, b), Mode::QuiteStrict);
  CHECK(perm::is_identity(big.perm));
  CHECK(big.dst == Expansion{{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}});

  CHECK(distribute_word(none, b).gen_kind() == GenKind::Id);
}

TEST_CASE("column distribution examples", "[canon]") {
  const std::vector<ObjExpr> none;
  const auto b = indexed("b", 2);
  CHECK(column_distribute_word(none, b).gen_kind() == GenKind::Id);
  const auto a = indexed("a", 2);
  CHECK(den(column_distribute_word(a, b)) == Permutation{0, 2, 1, 3});
  const auto lh = column_distribute_word(a, none);
  REQUIRE(lh.kind() == WordKind::Gen);
  CHECK(lh.gen_kind() == GenKind::LHat);
  CHECK(lh.params()[0] == e("a1 + a2"));
}

TEST_CASE("distribution words agree with name matching", "[canon][property]") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t m = 0; m <= 4; ++m) {
      const auto as = indexed("a", n);
      const auto bs = indexed("b", m);
      for (const auto& w : {distribute_word(as, bs), column_distribute_word(as, bs)}) {
        REQUIRE(only_uses(w, kExpansionGenerators, kExpansionCombinators));
        REQUIRE(strict_equal(w.source(), canonical_sum(as) * canonical_sum(bs), Mode::QuiteStrict));
        const auto d = denote(w, Mode::QuiteStrict);
        REQUIRE(d.perm == *oracle::match_by_name(d.src, d.dst));
      }
      const auto column = denote(column_distribute_word(as, bs), Mode::QuiteStrict);
      REQUIRE(column.dst == oracle::distribute(expansion_expr(column.dst)));
      REQUIRE(column.perm == oracle::transpose(n, m));
    }
  }
}

TEST_CASE("expand examples", "[canon]") {
  for (auto mode : {Mode::QuiteStrict, Mode::General}) {
    const auto zero = expand(ObjExpr::zero(), mode);
    CHECK(zero.result.empty());
    CHECK(zero.word.gen_kind() == GenKind::Id);

    const auto dl = expand(e("x*(y + z)"), mode);
    CHECK(dl.result == Expansion{{"x", "y"}, {"x", "z"}});
    CHECK(count_generators(dl.word, GenKind::DistL) == 1);

    const auto full = expand(e("(x + y)*(z + t)"), mode);
    CHECK(full.result == Expansion{{"x", "z"}, {"x", "t"}, {"y", "z"}, {"y", "t"}});

    const auto dropped = expand(e("x*0 + y"), mode);
    CHECK(dropped.result == Expansion{{"y"}});
    CHECK(count_generators(dropped.word, GenKind::LHat) == 1);
  }
  CHECK(expand(e("1 + x"), Mode::QuiteStrict).result == Expansion{{}, {"x"}});
}

TEST_CASE("expansion words are well formed", "[canon][property]") {
  for (const auto& y : support::up_to_leaves(4, {"x", "y", "z"})) {
    const auto expected = oracle::distribute(y);

    const auto qs = expand(y, Mode::QuiteStrict);
    REQUIRE(qs.result == expected);
    REQUIRE(qs.word.source() == y);
    REQUIRE(strict_equal(qs.word.target(), expansion_expr(qs.result), Mode::QuiteStrict));
    REQUIRE(only_uses(qs.word, kExpansionGenerators, kExpansionCombinators));
    const auto dq = denote(qs.word, Mode::QuiteStrict);
    REQUIRE(dq.src == expected);
    REQUIRE(dq.dst == expected);
    REQUIRE(expand(strict_normalize(y), Mode::QuiteStrict).result == expected);

    const auto gen = expand(y, Mode::General);
    REQUIRE(gen.result == expected);
    REQUIRE(gen.word.source() == y);
    REQUIRE(gen.word.target() == expansion_expr(gen.result));
    REQUIRE(validate(gen.word, Mode::General).ok());
    REQUIRE(denote(gen.word, Mode::General).dst == expected);
  }
}

TEST_CASE("expansion words denote the identity on distinct atoms", "[canon][property]") {
  for (const auto& y : enumerate_expressions(4, 4)) {
    if (!has_distinct_monomials(expansion_of(y))) continue;
    REQUIRE(perm::is_identity(den(expand(y, Mode::QuiteStrict).word)));
    REQUIRE(perm::is_identity(denote(expand(y, Mode::General).word, Mode::General).perm));
  }
}
