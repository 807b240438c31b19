#pragma once

// Morphism words of the free Ann-category and their permutation semantics.
//
// A word is a tree of constraint generators (each carrying its object
// parameters) closed under composition, the two laws, and formal inverse.
// Its denotation is the bijection it induces between the monomial indices
// of the expansions of its source and target.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anncoh/expansion.hpp"
#include "anncoh/expr.hpp"

namespace anncoh {

enum class GenKind {
  Id,          // Y -> Y
  C,           // A + B -> B + A
  AssocPlus,   // A + (B + C) -> (A + B) + C
  G,           // 0 + A -> A
  D,           // A + 0 -> A
  AssocTimes,  // A*(B*C) -> (A*B)*C
  LUnit,       // 1*A -> A
  RUnit,       // A*1 -> A
  DistL,       // A*(B + C) -> A*B + A*C
  DistR,       // (A + B)*C -> A*C + B*C
  LHat,        // A*0 -> 0
  RHat,        // 0*A -> 0
};

/// DSL keyword: `id`, `c`, `assocP`, `g`, `d`, `assocT`, `lu`, `ru`, `distL`, `distR`, `lhat`, `rhat`.
std::string_view keyword(GenKind kind) noexcept;
std::optional<GenKind> generator_from_keyword(std::string_view word) noexcept;
std::size_t arity(GenKind kind) noexcept;

/// Generators that are identities in a quite-strict Ann-category.
bool is_strict_generator(GenKind kind) noexcept;

enum class WordKind { Gen, Comp, OPlus, OTimes, Inv };

class MorWord {
 public:
  /// Throws Error when `params` does not match the generator's arity.
  static MorWord generator(GenKind kind, std::vector<ObjExpr> params);

  static MorWord id(ObjExpr y) { return generator(GenKind::Id, {std::move(y)}); }
  static MorWord c(ObjExpr a, ObjExpr b) { return generator(GenKind::C, {std::move(a), std::move(b)}); }
  static MorWord assoc_plus(ObjExpr a, ObjExpr b, ObjExpr c) {
    return generator(GenKind::AssocPlus, {std::move(a), std::move(b), std::move(c)});
  }
  static MorWord g(ObjExpr a) { return generator(GenKind::G, {std::move(a)}); }
  static MorWord d(ObjExpr a) { return generator(GenKind::D, {std::move(a)}); }
  static MorWord assoc_times(ObjExpr a, ObjExpr b, ObjExpr c) {
    return generator(GenKind::AssocTimes, {std::move(a), std::move(b), std::move(c)});
  }
  static MorWord lunit(ObjExpr a) { return generator(GenKind::LUnit, {std::move(a)}); }
  static MorWord runit(ObjExpr a) { return generator(GenKind::RUnit, {std::move(a)}); }
  static MorWord dist_l(ObjExpr a, ObjExpr b, ObjExpr c) {
    return generator(GenKind::DistL, {std::move(a), std::move(b), std::move(c)});
  }
  static MorWord dist_r(ObjExpr a, ObjExpr b, ObjExpr c) {
    return generator(GenKind::DistR, {std::move(a), std::move(b), std::move(c)});
  }
  static MorWord lhat(ObjExpr a) { return generator(GenKind::LHat, {std::move(a)}); }
  static MorWord rhat(ObjExpr a) { return generator(GenKind::RHat, {std::move(a)}); }

  /// `outer` after `inner`. Not type-checked; see comp() and validate().
  static MorWord composite(MorWord outer, MorWord inner);
  static MorWord oplus(MorWord lhs, MorWord rhs);
  static MorWord otimes(MorWord lhs, MorWord rhs);
  static MorWord inverse(MorWord w);

  WordKind kind() const noexcept;
  bool is_generator() const noexcept { return kind() == WordKind::Gen; }

  /// Generator accessors; precondition is_generator().
  GenKind gen_kind() const;
  std::span<const ObjExpr> params() const;

  /// Comp accessors: the word applied second and first.
  const MorWord& outer() const;
  const MorWord& inner() const;
  /// OPlus / OTimes accessors.
  const MorWord& lhs() const;
  const MorWord& rhs() const;
  /// Inv accessor.
  const MorWord& operand() const;

  /// Computed structurally: the laws act componentwise, Inv swaps, and a
  /// composite runs from its inner source to its outer target.
  const ObjExpr& source() const noexcept;
  const ObjExpr& target() const noexcept;

  /// Number of nodes.
  std::size_t size() const noexcept;

  friend bool operator==(const MorWord& a, const MorWord& b) noexcept;

 private:
  struct Node;
  explicit MorWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// DSL form; `;` reads left to right, so `f ; g` is g after f.
std::string to_string(const MorWord& w);

/// True when the word has no Inv node.
bool is_inverse_free(const MorWord& w);

/// True when every node satisfies `allowed`.
bool only_uses(const MorWord& w, std::span<const GenKind> allowed_generators, std::span<const WordKind> allowed_combinators);

class CompositionMismatch : public Error {
 public:
  CompositionMismatch(MorWord subword, ObjExpr inner_target, ObjExpr outer_source, Mode mode);

  const MorWord& subword() const noexcept { return subword_; }
  const ObjExpr& inner_target() const noexcept { return inner_target_; }
  const ObjExpr& outer_source() const noexcept { return outer_source_; }

 private:
  MorWord subword_;
  ObjExpr inner_target_;
  ObjExpr outer_source_;
};

struct ValidationReport {
  std::optional<CompositionMismatch> error;
  /// QuiteStrict only: generator instances that denote identities.
  std::vector<MorWord> redundant;

  bool ok() const noexcept { return !error.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

/// Checks every composite: the inner target and the outer source must be
/// strict_equal under `mode`.
ValidationReport validate(const MorWord& w, Mode mode);

/// `g` after `f`; throws CompositionMismatch when the boundaries disagree.
MorWord comp(const MorWord& g, const MorWord& f, Mode mode);
MorWord oplus(const MorWord& f, const MorWord& g);
MorWord otimes(const MorWord& f, const MorWord& g);
MorWord inv(const MorWord& f);

/// Composes a diagram path: `path[0]` first. Throws Error on an empty path.
MorWord compose_path(std::span<const MorWord> path, Mode mode);

/// perm[k] is the target index of source monomial k.
using Permutation = std::vector<std::size_t>;

namespace perm {

Permutation identity(std::size_t n);
/// after . before
Permutation compose(const Permutation& after, const Permutation& before);
Permutation inverse(const Permutation& p);
Permutation block_sum(const Permutation& a, const Permutation& b);
/// (i, j) -> (rows[i], cols[j]) under row-major indexing.
Permutation grid(const Permutation& rows, const Permutation& cols);
/// Swaps a leading block of m indices with a trailing block of q.
Permutation block_swap(std::size_t m, std::size_t q);
/// a*(b + c) -> a*b + a*c on index blocks of sizes m, p and q.
Permutation riffle(std::size_t m, std::size_t p, std::size_t q);
bool is_identity(const Permutation& p);
/// `[p0 p1 ...]`
std::string to_string(const Permutation& p);

}  // namespace perm

/// A typed bijection between two expansions.
struct Denotation {
  Expansion src;
  Expansion dst;
  Permutation perm;

  /// src[k] == dst[perm[k]] for every k.
  bool well_typed() const;

  friend bool operator==(const Denotation&, const Denotation&) = default;
};

/// Validates `w` and computes its denotation. Throws CompositionMismatch on
/// an ill-typed word and std::logic_error if the well-typedness invariant
/// of the result ever fails.
Denotation denote(const MorWord& w, Mode mode);

/// Permutation only, for callers that already validated `w`.
Permutation denote_permutation(const MorWord& w);

/// Number of denotations whose well-typedness has been checked in this process.
std::uint64_t denotation_checks() noexcept;

}  // namespace anncoh
