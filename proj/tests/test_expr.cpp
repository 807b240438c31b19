#include <catch_amalgamated.hpp>

#include "anncoh/dsl.hpp"
#include "anncoh/expansion.hpp"
#include "anncoh/expr.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace anncoh;
using support::v;

namespace {

ObjExpr e(const char* text) { return parse_expr(text); }

// One application of a strict rewrite rule at the root, if any applies.
std::vector<ObjExpr> root_steps(const ObjExpr& y) {
  std::vector<ObjExpr> out;
  if (y.is_plus()) {
    const auto& a = y.lhs();
    const auto& b = y.rhs();
    if (a.is_zero()) out.push_back(b);
    if (b.is_zero()) out.push_back(a);
    if (b.is_plus()) out.push_back((a + b.lhs()) + b.rhs());
  } else if (y.is_times()) {
    const auto& a = y.lhs();
    const auto& b = y.rhs();
    if (a.is_one()) out.push_back(b);
    if (b.is_one()) out.push_back(a);
    if (a.is_zero()) out.push_back(ObjExpr::zero());
    if (b.is_times()) out.push_back((a * b.lhs()) * b.rhs());
    if (a.is_plus()) out.push_back(a.lhs() * b + a.rhs() * b);
  }
  return out;
}

std::vector<ObjExpr> steps(const ObjExpr& y) {
  auto out = root_steps(y);
  if (y.is_plus() || y.is_times()) {
    auto rebuild = [&](ObjExpr l, ObjExpr r) { return y.is_plus() ? l + r : l * r; };
    for (auto& s : steps(y.lhs())) out.push_back(rebuild(s, y.rhs()));
    for (auto& s : steps(y.rhs())) out.push_back(rebuild(y.lhs(), s));
  }
  return out;
}

}  // namespace

TEST_CASE("atoms reject reserved and malformed names", "[expr]") {
  CHECK(is_atom_name("x"));
  CHECK(is_atom_name("_a1"));
  CHECK_FALSE(is_atom_name("0"));
  CHECK_FALSE(is_atom_name("1"));
  CHECK_FALSE(is_atom_name(""));
  CHECK_FALSE(is_atom_name("1x"));
  CHECK_THROWS_AS(Atom("0"), Error);
  CHECK(Atom("x") == Atom("x"));
  CHECK_FALSE(Atom("x") == Atom("X"));
}

TEST_CASE("length counts atom occurrences", "[expr]") {
  CHECK(e("x*(y + x)").length() == 3);
  CHECK(e("0 + 1").length() == 0);
  CHECK(e("0 + 1").leaf_count() == 2);
}

TEST_CASE("strict_normalize examples", "[expr]") {
  CHECK(strict_normalize(e("(x + y)*z")) == e("x*z + y*z"));
  CHECK(strict_normalize(e("x*(y + z)")) == e("x*(y + z)"));
  CHECK(strict_normalize(e("0*x")) == ObjExpr::zero());
  CHECK(strict_normalize(e("x*0")) == e("x*0"));
}

TEST_CASE("strict_normalize flattens and drops units", "[expr]") {
  CHECK(strict_normalize(e("x + (y + z)")) == e("x + y + z"));
  CHECK(strict_normalize(e("x*(y*z)")) == e("x*y*z"));
  CHECK(strict_normalize(e("0 + x + 0")) == e("x"));
  CHECK(strict_normalize(e("1*x*1")) == e("x"));
  CHECK(strict_normalize(e("x*((y + z)*w)")) == e("x*(y*w + z*w)"));
  CHECK(strict_normalize(e("(x + 0)*y")) == e("x*y"));
  CHECK(strict_normalize(e("x*(0 + y)")) == e("x*y"));
}

TEST_CASE("strict_equal examples", "[expr]") {
  CHECK(strict_equal(e("(x + y)*z"), e("x*z + y*z"), Mode::QuiteStrict));
  CHECK_FALSE(strict_equal(e("x*(y + z)"), e("x*y + x*z"), Mode::QuiteStrict));
  CHECK_FALSE(strict_equal(e("1*x"), e("x"), Mode::General));
  CHECK(strict_equal(e("1*x"), e("x"), Mode::QuiteStrict));
  CHECK(strict_equal(e("x + y"), e("x + y"), Mode::General));
}

TEST_CASE("atoms_of examples", "[expr]") {
  const auto counts = atom_counts(e("x*(y + x)"));
  CHECK(counts.size() == 2);
  CHECK(counts.at(Atom("x")) == 2);
  CHECK(counts.at(Atom("y")) == 1);
  CHECK(atoms_of(ObjExpr::zero()).empty());
  const auto seq = atoms_of(e("1 + x"));
  REQUIRE(seq.size() == 1);
  CHECK(seq[0] == Atom("x"));
  const auto order = atoms_of(e("x*(y + x)"));
  REQUIRE(order.size() == 3);
  CHECK(order[1] == Atom("y"));
  CHECK(has_distinct_atoms(e("x*y + z")));
  CHECK_FALSE(has_distinct_atoms(e("x*y + x")));
}

TEST_CASE("subst examples", "[expr]") {
  CHECK(subst(e("x + y"), {{Atom("x"), e("a*b")}}) == e("a*b + y"));
  CHECK(subst(e("x"), {{Atom("x"), ObjExpr::zero()}}) == ObjExpr::zero());
  CHECK(subst(e("x*x"), {{Atom("x"), e("y + z")}}) == e("(y + z)*(y + z)"));
  // Simultaneous, not sequential.
  CHECK(subst(e("x + y"), {{Atom("x"), v("y")}, {Atom("y"), v("x")}}) == e("y + x"));
}

TEST_CASE("strict_normalize is idempotent and preserves the expansion", "[expr][property]") {
  const auto all = support::up_to_leaves(5, {"x", "y", "z"});
  REQUIRE(all.size() > 700000);
  std::size_t failures = 0;
  for (const auto& y : all) {
    const ObjExpr n = strict_normalize(y);
    if (!(strict_normalize(n) == n)) ++failures;
    if (expansion_of(n) != expansion_of(y)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("expansion_of agrees with full distribution", "[expr][property]") {
  for (const auto& y : support::up_to_leaves(4, {"x", "y", "z"})) {
    REQUIRE(expansion_of(y) == oracle::distribute(y));
  }
}

TEST_CASE("every strict rewrite step preserves the normal form", "[expr][property]") {
  std::size_t checked = 0;
  for (const auto& y : support::up_to_leaves(4, {"x", "y"})) {
    const ObjExpr n = strict_normalize(y);
    for (const auto& s : steps(y)) {
      REQUIRE(strict_normalize(s) == n);
      ++checked;
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("strict_equal is implied by syntactic equality and is an equivalence", "[expr][property]") {
  const auto all = support::up_to_leaves(3, {"x", "y"});
  for (const auto& a : all) {
    REQUIRE(strict_equal(a, a, Mode::QuiteStrict));
    REQUIRE(strict_equal(a, a, Mode::General));
  }
  // Equivalence follows from comparing normal forms; spot-check symmetry and transitivity.
  for (std::size_t i = 0; i < all.size(); i += 7) {
    for (std::size_t j = 0; j < all.size(); j += 5) {
      const bool ij = strict_equal(all[i], all[j], Mode::QuiteStrict);
      REQUIRE(ij == strict_equal(all[j], all[i], Mode::QuiteStrict));
      if (!ij) continue;
      for (std::size_t k = 0; k < all.size(); k += 11) {
        if (strict_equal(all[j], all[k], Mode::QuiteStrict)) REQUIRE(strict_equal(all[i], all[k], Mode::QuiteStrict));
      }
    }
  }
}

TEST_CASE("printing uses minimal parentheses", "[expr]") {
  CHECK(to_string(e("(x + y) + z")) == "x + y + z");
  CHECK(to_string(e("x + (y + z)")) == "x + (y + z)");
  CHECK(to_string(e("(x*y)*z")) == "x*y*z");
  CHECK(to_string(e("x*(y*z)")) == "x*(y*z)");
  CHECK(to_string(e("(x + y)*z")) == "(x + y)*z");
  CHECK(to_string(e("x*y + z*w")) == "x*y + z*w");
}
